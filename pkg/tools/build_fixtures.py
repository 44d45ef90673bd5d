"""Generate the rule/situation fixture corpus under fixtures/corpus.

Design, in brief:

* 24 pairs, ids p01..p24. Each pair owns a private 8-axis block of the
  192-dimensional embedding space, so every cross-pair cosine is exactly 0
  (scaled similarity 0.5) and a sampled negative can never prove at any
  swept threshold. Concept vocabulary is unique per pair as well (verdict
  roots aside), so exact-string unification cannot cross pairs either; an
  audit below enforces both properties.

* Pairs are stratified by collapsability so bucketed recall is meaningful:
    - p01..p09, p24: collapsability 0 on both sides (no embeddings, a
      coreference that blocks every shrinking merge, or negation).
    - p10..p13: collapsability exactly 1/3 on both sides.
    - p14..p23: collapsability >= 1/2 on both sides.

* Match outcomes at the default configuration (threshold 0.925, merge
  width 6) are designed, not measured, and frozen into adjudication.json:
    - exact-string matches prove at similarity 1.0 (p01 p02 p03 p23 p24);
    - direct embedding matches at cos 0.92 prove at 0.96 (p10 p11 p18 p19
      p20) and cos 0.88 at 0.94 (p09);
    - merge-dependent matches flip on the width axis: p14 needs a width-2
      rule-side merge (avg(dog, white) vs dog, cos 2/sqrt(5), sim
      0.947214), p15 a width-4 situation-side merge (avg of person +
      relative-role chain vs someone, same similarity), p16 a width-2
      situation-side merge (avg(box, ball) vs toy, sim 0.941726), p17 a
      width-6 merge (husky + five modifiers vs hound, sim 0.939155);
    - near-misses stay unmatched at 0.925 but match at looser thresholds:
      p12 p13 p21 at 0.85, p16 directly at 0.90; p22 is unmatched at every
      swept threshold (0.80 is not strictly exceeded by its 0.80);
    - p04..p08 ask for structure the situation lacks and never match.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from amr_reasoner import AlignedAmrDocument, normalize, parse_penman

DIM = 192
AXES_PER_PAIR = 8
ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT / "fixtures" / "corpus"

# Verdict roots are consumed by the lexicon and never become literals, so
# they may repeat across pairs; everything else must be pair-unique.
VERDICT_ROOTS = {"good", "bad", "rude", "polite"}


def _pair_number(pair_id: str) -> int:
    return int(pair_id[1:]) - 1


def axis(pair_id: str, offset: int) -> np.ndarray:
    if not 0 <= offset < AXES_PER_PAIR:
        raise ValueError(f"axis offset {offset} outside the pair block")
    vector = np.zeros(DIM, dtype=np.float32)
    vector[AXES_PER_PAIR * _pair_number(pair_id) + offset] = 1.0
    return vector


def mix(*parts: tuple[float, np.ndarray]) -> np.ndarray:
    out = np.zeros(DIM, dtype=np.float32)
    for coefficient, vector in parts:
        out += np.float32(coefficient) * vector
    return out


def cos_partner(main: np.ndarray, other: np.ndarray, cosine: float) -> np.ndarray:
    """Unit vector at the given cosine to ``main``, tilted toward ``other``."""
    return mix((cosine, main), (float(np.sqrt(1.0 - cosine**2)), other))


def document(doc_id: str, text: str, penman: str, embedded: dict[str, np.ndarray]) -> dict:
    """Aligned document with one token per embedded node plus the raw text."""
    tree = parse_penman(penman)
    labels = list(embedded)
    tokens = [*labels, *text.split()]
    alignments = {}
    matrix = [embedded[label] for label in labels]
    matrix += [np.zeros(DIM, dtype=np.float32) for _ in text.split()]
    for index, label in enumerate(labels):
        alignments[tree.path_of(tree.instance_by_label(label))] = [index]
    return {
        "id": doc_id,
        "text": text,
        "penman": penman,
        "tokens": tokens,
        "node_alignments": alignments,
        "token_embeddings": [row.tolist() for row in matrix],
    }


def build_pairs() -> dict[str, tuple[dict, dict]]:
    pairs: dict[str, tuple[dict, dict]] = {}

    def add(pair_id: str, rot_text: str, rot_penman: str, rot_embedded: dict,
            sst_text: str, sst_penman: str, sst_embedded: dict) -> None:
        pairs[pair_id] = (
            document(f"{pair_id}-rot", rot_text, rot_penman, rot_embedded),
            document(f"{pair_id}-sst", sst_text, sst_penman, sst_embedded),
        )

    # ------ zero-collapsability stratum -------------------------------------

    add("p01",
        "it is bad to interrupt a speaker",
        "(b / bad-07 :ARG1 (x / interrupt-01 :ARG1 (s / speaker)))", {},
        "he interrupted the speaker",
        "(x2 / interrupt-01 :ARG1 (s2 / speaker))", {})

    add("p02",
        "it is rude to yell at a teacher",
        "(r / rude-01 :ARG1 (y / yell-01 :ARG2 (t / teacher)))", {},
        "she yelled at the teacher",
        "(y2 / yell-01 :ARG2 (t2 / teacher))", {})

    add("p03",
        "it is good to thank a helper",
        "(g / good-02 :ARG1 (t / thank-01 :ARG1 (h / helper)))", {},
        "they thanked the helper",
        "(t2 / thank-01 :ARG1 (h2 / helper))", {})

    add("p04",
        "it is bad to chew loudly",
        "(b / bad-07 :ARG1 (c / chew-01 :manner (l / loud-04)))", {},
        "he chewed",
        "(c2 / chew-01)", {})

    add("p05",
        "it is rude to whisper during a meeting",
        "(r / rude-01 :ARG1 (w / whisper-01 :time (m / meeting)))", {},
        "she whispered",
        "(w2 / whisper-01)", {})

    add("p06",
        "it is good to share a snack",
        "(g / good-02 :ARG1 (s / share-01 :ARG1 (n / snack)))", {},
        "he shared the storybook",
        "(s2 / share-01 :ARG1 (b / storybook))", {})

    add("p07",
        "it is polite to greet an elder",
        "(p / polite-01 :ARG1 (g2 / greet-01 :ARG1 (e / elder)))", {},
        "she greeted the newcomer",
        "(g3 / greet-01 :ARG1 (n / newcomer))", {})

    add("p08",
        "it is bad to slam a door",
        "(b / bad-07 :ARG1 (s / slam-01 :ARG1 (d / door)))", {},
        "he knocked on the door",
        "(k / knock-02 :ARG1 (d2 / door))", {})

    # p09: collapsability 0 on both sides despite embeddings. The rule-side
    # coreference keeps the help subtree unmergeable, the remaining merge has
    # width 1 and cannot shrink the tree; the situation's only merge target
    # is its width-1 leaf. dad vs parent at cos 0.88 proves at 0.94 (clear of
    # both the 0.925 default and the 0.95 sweep point).
    dad = axis("p09", 0)
    parent = cos_partner(dad, axis("p09", 1), 0.88)
    add("p09",
        "it is good that dad helps",
        "(g / good-02 :ARG1 (h / help-01 :ARG0 (d / dad)) :ARG2 h)",
        {"d": dad},
        "a parent helped",
        "(h2 / help-01 :ARG0 (p / parent))",
        {"p": parent})

    # p24: negation on both sides; the polarity edge blocks every merge, so
    # collapsability is 0. Exact strings prove at 1.0 through the negated
    # concept literal.
    add("p24",
        "it is bad to not refuse politely an invitation",
        "(b / bad-07 :ARG1 (f / refuse-01 :polarity - :ARG1 (i / invitation)))", {},
        "he did not refuse the invitation",
        "(f2 / refuse-01 :polarity - :ARG1 (i2 / invitation))", {})

    # ------ mid stratum: collapsability exactly 1/3 -------------------------
    # Rule shape: 4 nodes, the deepest valid merge shrinks the tree by one.
    # Situation shape: 4 nodes, same property.

    def mid_pair(pair_id: str, rot_text: str, verdict: str, verb: str, manner: str,
                 extra: str, sst_text: str, agent: str, sst_manner: str,
                 sst_submod: str, manner_cos: float) -> None:
        e, f, g, h = (axis(pair_id, k) for k in range(4))
        agent_axis, submod_axis = axis(pair_id, 4), axis(pair_id, 5)
        rot_embedded = {"v": g, "c": e, "a": h}
        sst_embedded = {
            "k": agent_axis,
            "c2": cos_partner(e, f, manner_cos),
            "d2": submod_axis,
        }
        add(pair_id,
            rot_text,
            f"({verdict[0]} / {verdict} :ARG1 (v / {verb} :mod (c / {manner})) :mod (a / {extra}))",
            rot_embedded,
            sst_text,
            f"(v2 / {verb} :ARG0 (k / {agent}) :mod (c2 / {sst_manner} :mod (d2 / {sst_submod})))",
            sst_embedded)

    mid_pair("p10", "it is good to listen carefully", "good-02", "listen-01",
             "careful", "always", "the kid listened attentively and deeply",
             "kid", "attentive", "deep", 0.92)
    mid_pair("p11", "it is rude to talk boomingly", "rude-01", "talk-01",
             "booming", "often", "the student talked very noisily",
             "student", "noisy", "very", 0.92)
    mid_pair("p12", "it is bad to skip repeatedly", "bad-07", "skip-01",
             "repeated", "usually", "the player skipped fairly casually",
             "player", "casual", "fairly", 0.70)
    mid_pair("p13", "it is rude to point directly", "rude-01", "point-01",
             "direct-02", "sometimes", "the tourist pointed quite hastily",
             "tourist", "hasty", "quite", 0.70)

    # ------ high stratum: collapsability >= 1/2 -----------------------------

    # p14: white dog. Unmerged, white(W) has no counterpart; merging
    # {dog, white} (width 2) gives avg = 0.8*dog + 0.4*f, cos 2/sqrt(5)
    # with dog, similarity 0.947214.
    dog = axis("p14", 0)
    white = mix((0.6, dog), (0.8, axis("p14", 1)))
    add("p14",
        "it is good to pet a white dog",
        "(g / good-02 :ARG1 (p / pet-01 :ARG1 (d / dog :mod (w / white-03))))",
        {"d": dog, "w": white},
        "i pet the cute brown dog",
        "(p2 / pet-01 :ARG1 (d2 / dog :mod (b2 / brown :mod (c2 / cute))))",
        {"d2": dog, "b2": axis("p14", 2), "c2": axis("p14", 3)})

    # p15: hang-up on a cousin. someone = (person + q)/sqrt(2) sits at cos
    # 0.7071 from person (fails at 0.925); merging the width-4 person chain
    # gives avg = (person + 3q)/4, cos 2/sqrt(5), similarity 0.947214.
    person = axis("p15", 0)
    q = axis("p15", 1)
    someone = mix((float(1 / np.sqrt(2)), person), (float(1 / np.sqrt(2)), q))
    add("p15",
        "it is rude to hang up on someone",
        "(r / rude-01 :ARG1 (h / hang-up-02 :ARG2 (s / someone)))",
        {"h": axis("p15", 2), "s": someone},
        "the person my cousin was talking to hung up",
        "(h2 / hang-up-02 :ARG2 (p / person :ARG0-of (h3 / have-rel-role-91 :ARG1 (i / i) :ARG2 (c / cousin))))",
        {"p": person, "h3": q, "i": q, "c": q})

    # p16: interposed node. toy vs box at cos 0.80 (fails at 0.925);
    # merging {box, ball} (width 2) gives avg = 0.8*toy + 0.3f + 0.3g,
    # cos 0.8/sqrt(0.82), similarity 0.941726.
    toy = axis("p16", 0)
    box = mix((0.8, toy), (0.6, axis("p16", 1)))
    ball = mix((0.8, toy), (0.6, axis("p16", 2)))
    add("p16",
        "it is good to hold a toy",
        "(g / good-02 :ARG1 (ho / hold-01 :ARG1 (t / toy)))",
        {"ho": axis("p16", 3), "t": toy},
        "she held the box with a ball",
        "(ho2 / hold-01 :ARG1 (bo / box :ARG1 (ba / ball)))",
        {"bo": box, "ba": ball})

    # p17: width-6 flip. husky and each of its five modifiers sit at cos 0.6
    # from hound (similarity 0.8, never enough); only the full width-6 merge
    # reaches cos 0.6/sqrt(7/15), similarity 0.939155.
    hound = axis("p17", 0)
    husky = mix((0.6, hound), (0.8, axis("p17", 7)))
    mods = {f"m{k}": mix((0.6, hound), (0.8, axis("p17", k))) for k in range(1, 6)}
    add("p17",
        "it is good to walk a hound",
        "(g / good-02 :ARG1 (wa / walk-01 :ARG1 (do / hound)))",
        {"wa": axis("p17", 6), "do": hound},
        "he walked the shaggy bouncy speedy sturdy gentle husky",
        "(wa2 / walk-01 :ARG1 (hu / husky :mod (m1 / shaggy) :mod (m2 / bouncy)"
        " :mod (m3 / speedy) :mod (m4 / sturdy) :mod (m5 / gentle)))",
        {"hu": husky, **mods})

    # p18..p20: both soft literals at cos 0.92, similarity 0.96.
    def direct_pair(pair_id: str, rot_text: str, verdict: str, rot_verb: str,
                    rot_obj: str, rot_role: str, sst_text: str, sst_verb: str,
                    sst_obj: str, sst_mod: str) -> None:
        verb_axis, verb_tilt = axis(pair_id, 0), axis(pair_id, 1)
        obj_axis, obj_tilt = axis(pair_id, 2), axis(pair_id, 3)
        add(pair_id,
            rot_text,
            f"({verdict[0]} / {verdict} :ARG1 (v / {rot_verb} {rot_role} (o / {rot_obj})))",
            {"v": verb_axis, "o": obj_axis},
            sst_text,
            f"(v2 / {sst_verb} {rot_role} (o2 / {sst_obj} :mod (m / {sst_mod})))",
            {"v2": cos_partner(verb_axis, verb_tilt, 0.92),
             "o2": cos_partner(obj_axis, obj_tilt, 0.92),
             "m": axis(pair_id, 4)})

    direct_pair("p18", "it is good to hug a friend", "good-02", "hug-01",
                "friend", ":ARG1", "he embraced an old pal", "embrace-01",
                "pal", "old-02")
    direct_pair("p19", "it is good to give a present", "good-02", "give-01",
                "present-02", ":ARG1", "she donated a small gift", "donate-01",
                "gift", "small")
    direct_pair("p20", "it is rude to shout at a baby", "rude-01", "shout-01",
                "baby", ":ARG2", "he screamed at the tiny infant", "scream-01",
                "infant", "tiny")

    # p21: both soft literals at cos 0.70, similarity 0.85 — unmatched at
    # 0.925 and 0.85, matched once the threshold drops to 0.80.
    visit, museum = axis("p21", 0), axis("p21", 2)
    add("p21",
        "it is bad to visit a museum",
        "(b / bad-07 :ARG1 (vi / visit-01 :ARG1 (mu / museum)))",
        {"vi": visit, "mu": museum},
        "they wandered through the peaceful park",
        "(wn / wander-01 :ARG1 (pk / park :mod (qu2 / peaceful)))",
        {"wn": cos_partner(visit, axis("p21", 1), 0.70),
         "pk": cos_partner(museum, axis("p21", 3), 0.70),
         "qu2": axis("p21", 4)})

    # p22: verbs at cos 0.60 (similarity 0.80, never strictly above 0.80),
    # objects orthogonal — unmatched at every swept threshold.
    stare = axis("p22", 0)
    add("p22",
        "it is rude to stare at a stranger",
        "(r / rude-01 :ARG1 (st2 / stare-01 :ARG1 (stng / stranger)))",
        {"st2": stare, "stng": axis("p22", 2)},
        "she glanced at the wooden window",
        "(gl / glance-01 :ARG1 (wi / window :mod (fr2 / wooden)))",
        {"gl": cos_partner(stare, axis("p22", 1), 0.60),
         "wi": axis("p22", 3), "fr2": axis("p22", 4)})

    # p23: quoted named constant, exact strings on both sides — proves at
    # 1.0 on the unmerged pair and short-circuits the variant search.
    add("p23",
        "it is good to welcome Bo",
        '(g / good-02 :ARG1 (we / welcome-01 :ARG1 (vis / visitor :named "Bo")))',
        {"vis": axis("p23", 0)},
        "they welcomed the visitor Bo",
        '(we2 / welcome-01 :ARG1 (vis2 / visitor :named "Bo"))',
        {"vis2": axis("p23", 1)})

    return pairs


# Designed outcomes at threshold 0.925, merge width 6; written from the
# geometry above, not from running the matcher.
ADJUDICATION = {
    "config": {"threshold": 0.925, "max_width": 6, "min_depth": 1, "seed_free": True},
    "pairs": {
        "p01": {"matched": True, "similarity": 1.0, "why": "exact-string body"},
        "p02": {"matched": True, "similarity": 1.0, "why": "exact-string body"},
        "p03": {"matched": True, "similarity": 1.0, "why": "exact-string body"},
        "p04": {"matched": False, "similarity": None, "why": "rule needs a loud manner the situation lacks"},
        "p05": {"matched": False, "similarity": None, "why": "rule needs a meeting time the situation lacks"},
        "p06": {"matched": False, "similarity": None, "why": "snack vs storybook share no similarity"},
        "p07": {"matched": False, "similarity": None, "why": "elder vs newcomer share no similarity"},
        "p08": {"matched": False, "similarity": None, "why": "slam vs knock share no similarity"},
        "p09": {"matched": True, "similarity": 0.94, "why": "dad vs parent at cos 0.88"},
        "p10": {"matched": True, "similarity": 0.96, "why": "careful vs attentive at cos 0.92"},
        "p11": {"matched": True, "similarity": 0.96, "why": "booming vs noisy at cos 0.92"},
        "p12": {"matched": False, "similarity": None, "why": "repeated vs casual only cos 0.70 (0.85)"},
        "p13": {"matched": False, "similarity": None, "why": "direct vs hasty only cos 0.70 (0.85)"},
        "p14": {"matched": True, "similarity": 0.9472135955, "why": "width-2 rule merge avg(dog,white) vs dog"},
        "p15": {"matched": True, "similarity": 0.9472135955, "why": "width-4 situation merge vs someone"},
        "p16": {"matched": True, "similarity": 0.9417258546, "why": "width-2 situation merge avg(box,ball) vs toy"},
        "p17": {"matched": True, "similarity": 0.9391550328, "why": "width-6 situation merge vs hound"},
        "p18": {"matched": True, "similarity": 0.96, "why": "hug/embrace and friend/pal at cos 0.92"},
        "p19": {"matched": True, "similarity": 0.96, "why": "give/donate and present/gift at cos 0.92"},
        "p20": {"matched": True, "similarity": 0.96, "why": "shout/scream and baby/infant at cos 0.92"},
        "p21": {"matched": False, "similarity": None, "why": "visit/wander and museum/park only cos 0.70 (0.85)"},
        "p22": {"matched": False, "similarity": None, "why": "stare/glance only cos 0.60 (0.80, not strictly above 0.80)"},
        "p23": {"matched": True, "similarity": 1.0, "why": "exact strings incl. named constant"},
        "p24": {"matched": True, "similarity": 1.0, "why": "exact strings through negated concept"},
    },
    "buckets": {
        "edges": [0.25, 0.5],
        # p04 and p05 have single-node situations, so their collapsability is
        # undefined and bucketing excludes those records entirely.
        "undefined": {"pairs": ["p04", "p05"]},
        "zero": {"pairs": ["p01", "p02", "p03", "p06", "p07", "p08", "p09", "p24"], "recall": 0.625},
        "mid": {"pairs": ["p10", "p11", "p12", "p13"], "recall": 0.5},
        "high": {"pairs": ["p14", "p15", "p16", "p17", "p18", "p19", "p20", "p21", "p22", "p23"], "recall": 0.8},
    },
}


def audit(pairs: dict[str, tuple[dict, dict]]) -> None:
    """Enforce the two cross-pair isolation properties."""
    concepts: dict[str, set[str]] = {}
    for pair_id, (rot, sst) in pairs.items():
        names: set[str] = set()
        for doc, skip_root in ((rot, True), (sst, False)):
            tree = normalize(parse_penman(doc["penman"]))
            for nid in tree.instance_ids():
                if skip_root and nid == tree.root:
                    root_concept = tree.nodes[nid].predicate
                    if root_concept not in VERDICT_ROOTS:
                        raise AssertionError(f"{pair_id}: unexpected rule root {root_concept}")
                    continue
                names.add(tree.nodes[nid].predicate)
        concepts[pair_id] = names
    ids = sorted(concepts)
    for first in ids:
        for second in ids:
            if first < second and (shared := concepts[first] & concepts[second]):
                raise AssertionError(f"{first} and {second} share concepts {shared}")
    for pair_id, (rot, sst) in pairs.items():
        block = range(AXES_PER_PAIR * _pair_number(pair_id), AXES_PER_PAIR * (_pair_number(pair_id) + 1))
        for doc in (rot, sst):
            matrix = np.asarray(doc["token_embeddings"], dtype=np.float32)
            outside = np.delete(matrix, list(block), axis=1)
            if np.any(outside != 0.0):
                raise AssertionError(f"{doc['id']} writes outside its axis block")


def main() -> None:
    CORPUS_DIR.mkdir(parents=True, exist_ok=True)
    pairs = build_pairs()
    if set(pairs) != {f"p{k:02d}" for k in range(1, 25)}:
        raise AssertionError("expected exactly p01..p24")
    if set(ADJUDICATION["pairs"]) != set(pairs):
        raise AssertionError("adjudication must cover every pair")
    audit(pairs)
    for pair_id, (rot, sst) in sorted(pairs.items()):
        for suffix, payload in (("rot", rot), ("sst", sst)):
            doc = AlignedAmrDocument.from_dict(payload)
            doc.validate()
            doc.save(CORPUS_DIR / f"{pair_id}.{suffix}.json")
    with open(ROOT / "fixtures" / "adjudication.json", "w", encoding="utf-8") as handle:
        json.dump(ADJUDICATION, handle, indent=1)
        handle.write("\n")
    print(f"wrote {2 * len(pairs)} documents to {CORPUS_DIR}")


if __name__ == "__main__":
    main()
