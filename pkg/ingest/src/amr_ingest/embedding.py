"""Per-token embedding backends.

All backends implement ``embed(tokens) -> float32 array of shape
(len(tokens), dim)`` with one row per input token, and expose ``dim``
once known. The transformer-backed ones follow the same recipe: run the
model, average the final four hidden layers, then mean-pool subword rows
back onto the original tokens.

- ``TransformersLastFourEmbedder`` loads a pretrained model by identifier.
- ``TinyRandomEmbedder`` is the same forward pass on a small randomly
  initialized encoder, for deterministic offline runs and tests.
- ``HashEmbedder`` derives a unit vector from each token's hash; no model
  at all, but stable across runs and machines.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import EmbeddingFailure

_LAST_LAYERS = 4


def _token_seed(token: str) -> int:
    digest = hashlib.sha256(token.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


class HashEmbedder:
    """Hash each token to a reproducible unit vector; position-independent."""

    def __init__(self, dim: int = 16):
        if dim < 1:
            raise EmbeddingFailure(f"embedding dimension must be positive, got {dim}")
        self.dim = dim

    def embed(self, tokens: tuple[str, ...]) -> np.ndarray:
        rows = np.zeros((len(tokens), self.dim), dtype=np.float32)
        for position, token in enumerate(tokens):
            rng = np.random.default_rng(_token_seed(token))
            vector = rng.standard_normal(self.dim)
            rows[position] = (vector / np.linalg.norm(vector)).astype(np.float32)
        return rows


class TinyRandomEmbedder:
    """Small randomly initialized encoder run with the production recipe.

    Weights come from a fixed seed, so outputs are deterministic without
    any downloaded model. Tokens map to vocabulary ids by hash, one id per
    token, so the subword pooling step is the identity here.
    """

    def __init__(self, seed: int = 0):
        self.seed = seed
        self.dim: int | None = None
        self._model = None

    def _load(self):
        try:
            import torch
            from transformers import BertConfig, BertModel
        except ImportError as error:
            raise EmbeddingFailure(f"torch/transformers unavailable: {error}") from error
        torch.manual_seed(self.seed)
        config = BertConfig(
            vocab_size=512,
            hidden_size=32,
            num_hidden_layers=_LAST_LAYERS,
            num_attention_heads=4,
            intermediate_size=64,
            max_position_embeddings=128,
        )
        self._model = BertModel(config).eval()
        self.dim = config.hidden_size

    def embed(self, tokens: tuple[str, ...]) -> np.ndarray:
        import torch

        if self._model is None:
            self._load()
        if not tokens:
            return np.zeros((0, self.dim), dtype=np.float32)
        vocab = self._model.config.vocab_size
        ids = torch.tensor([[_token_seed(token.lower()) % vocab for token in tokens]])
        with torch.no_grad():
            outputs = self._model(input_ids=ids, output_hidden_states=True)
        stacked = torch.stack(outputs.hidden_states[-_LAST_LAYERS:]).mean(dim=0)[0]
        return stacked.numpy().astype(np.float32)


class TransformersLastFourEmbedder:
    """Pretrained contextual embedder addressed by model identifier."""

    def __init__(self, model_id: str):
        self.model_id = model_id
        self.dim: int | None = None
        self._tokenizer = None
        self._model = None

    def _load(self):
        try:
            from transformers import AutoModel, AutoTokenizer
        except ImportError as error:
            raise EmbeddingFailure(f"transformers unavailable: {error}") from error
        try:
            self._tokenizer = AutoTokenizer.from_pretrained(self.model_id)
            self._model = AutoModel.from_pretrained(self.model_id).eval()
        except Exception as error:
            raise EmbeddingFailure(
                f"embedding model {self.model_id!r} failed to load: {error}"
            ) from error
        self.dim = self._model.config.hidden_size

    def embed(self, tokens: tuple[str, ...]) -> np.ndarray:
        import torch

        if self._model is None:
            self._load()
        if not tokens:
            return np.zeros((0, self.dim), dtype=np.float32)
        encoded = self._tokenizer(
            list(tokens), is_split_into_words=True, return_tensors="pt", truncation=True
        )
        with torch.no_grad():
            outputs = self._model(**encoded, output_hidden_states=True)
        stacked = torch.stack(outputs.hidden_states[-_LAST_LAYERS:]).mean(dim=0)[0]
        rows = np.zeros((len(tokens), self.dim), dtype=np.float32)
        counts = np.zeros(len(tokens), dtype=np.int64)
        for piece, word in enumerate(encoded.word_ids()):
            if word is None:
                continue
            rows[word] += stacked[piece].numpy()
            counts[word] += 1
        pooled = counts > 0
        rows[pooled] /= counts[pooled, None]
        return rows.astype(np.float32)


def build_embedder(spec: str):
    """Dispatch ``hash[:dim]`` / ``tiny-random[:seed]`` / model identifier."""
    name, _, argument = spec.partition(":")
    if name in ("hash", "tiny-random"):
        try:
            value = int(argument) if argument else None
        except ValueError as error:
            raise EmbeddingFailure(f"bad embedder argument in {spec!r}") from error
        if name == "hash":
            return HashEmbedder(value) if value is not None else HashEmbedder()
        return TinyRandomEmbedder(value) if value is not None else TinyRandomEmbedder()
    return TransformersLastFourEmbedder(spec)
