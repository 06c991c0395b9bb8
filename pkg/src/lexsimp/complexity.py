"""Word-complexity features and the simple/complex classifier.

Five features describe a word: its unigram probability, how many corpus
sentences it appears in, its raw occurrence count, its character length,
and how many sense groups the thesaurus records for it.  A small
feed-forward network (5 inputs, one ReLU hidden layer of 3 units, 2
sigmoid output units) maps those features to simple/complex probabilities.
Training uses ADAM with per-unit binary cross-entropy against one-hot
targets; features are z-scored with statistics fitted on the training
split and stored inside the classifier, so callers always pass raw
features.

The whole network is implemented directly on numpy arrays: forward pass,
backpropagation, and the optimizer live here so gradients can be checked
against finite differences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .langmodel import NGramModel, unigram_prob, word_stats

__all__ = [
    "Complexity",
    "ComplexityLabel",
    "WordFeatureVector",
    "ComplexityClassifier",
    "TrainConfig",
    "extract_features",
    "relabel",
    "train",
    "predict",
    "loss_and_gradients",
    "save_classifier",
    "load_classifier",
    "read_lexicon",
]

MLP_MAGIC = b"SIMPLEX-MLP1"

N_FEATURES = 5
N_HIDDEN = 3
N_OUTPUTS = 2


class Complexity(Enum):
    SIMPLE = "simple"
    COMPLEX = "complex"


@dataclass(frozen=True)
class ComplexityLabel:
    """Predicted class plus the raw (p_simple, p_complex) sigmoid outputs."""

    label: Complexity
    probabilities: tuple[float, float]


@dataclass(frozen=True)
class WordFeatureVector:
    """The five features, in fixed input-unit order."""

    unigram_probability: float
    sentence_count: int
    occurrence_count: int
    word_length: int
    synset_size: int

    def as_array(self) -> np.ndarray:
        return np.array(
            [
                self.unigram_probability,
                self.sentence_count,
                self.occurrence_count,
                self.word_length,
                self.synset_size,
            ],
            dtype=np.float64,
        )


def extract_features(word: str, model: NGramModel, thesaurus) -> WordFeatureVector:
    """Compute the feature vector for a word against a model and thesaurus."""
    occurrences, sentences = word_stats(model, word)
    return WordFeatureVector(
        unigram_probability=unigram_prob(model, word),
        sentence_count=sentences,
        occurrence_count=occurrences,
        word_length=len(word),
        synset_size=thesaurus.synset_size(word),
    )


def relabel(rating: float) -> Complexity:
    """Map a 1-6 human complexity rating to a binary class.

    Ratings below 3.0 are simple; 3.0 and above are complex, so borderline
    words remain simplification candidates.
    """
    if not (1.0 <= rating <= 6.0):
        raise ValueError(f"rating must be in [1, 6], got {rating!r}")
    return Complexity.COMPLEX if rating >= 3.0 else Complexity.SIMPLE


def read_lexicon(path) -> list[tuple[str, float]]:
    """Read a "word<TAB>rating" complexity lexicon."""
    entries = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            try:
                word, rating = line.split("\t")
                entries.append((word, float(rating)))
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: {exc}") from exc
    return entries


def _sigmoid(z: np.ndarray) -> np.ndarray:
    out = np.empty_like(z)
    pos = z >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-z[pos]))
    ez = np.exp(z[~pos])
    out[~pos] = ez / (1.0 + ez)
    return out


@dataclass
class ComplexityClassifier:
    """5 -> 3 -> 2 network weights plus the stored feature scaler.

    Immutable by convention after training; predictions are deterministic
    and safe to run concurrently.
    """

    w1: np.ndarray  # (3, 5)
    b1: np.ndarray  # (3,)
    w2: np.ndarray  # (2, 3)
    b2: np.ndarray  # (2,)
    scaler_mean: np.ndarray  # (5,)
    scaler_std: np.ndarray   # (5,)
    loss_history: list[float] = field(default_factory=list, repr=False, compare=False)

    def scale(self, x: np.ndarray) -> np.ndarray:
        return (x - self.scaler_mean) / self.scaler_std

    def forward_scaled(self, x_scaled: np.ndarray) -> np.ndarray:
        """Run the bare network on already-standardized features."""
        h = np.maximum(0.0, x_scaled @ self.w1.T + self.b1)
        return _sigmoid(h @ self.w2.T + self.b2)

    def forward(self, x_raw: np.ndarray) -> np.ndarray:
        return self.forward_scaled(self.scale(x_raw))


def predict(classifier: ComplexityClassifier, features: WordFeatureVector) -> ComplexityLabel:
    """Classify one word; ties resolve to simple."""
    y = classifier.forward(features.as_array())
    p_simple, p_complex = float(y[0]), float(y[1])
    label = Complexity.COMPLEX if p_complex > p_simple else Complexity.SIMPLE
    return ComplexityLabel(label=label, probabilities=(p_simple, p_complex))


@dataclass(frozen=True)
class TrainConfig:
    learning_rate: float = 0.001
    beta1: float = 0.9
    beta2: float = 0.999
    adam_eps: float = 1e-8
    epochs: int = 200
    batch_size: int = 32
    seed: int = 0


def _one_hot(label: Complexity) -> np.ndarray:
    # [1 0] marks a simple word, [0 1] a complex one.
    return np.array([1.0, 0.0]) if label is Complexity.SIMPLE else np.array([0.0, 1.0])


def loss_and_gradients(
    w1: np.ndarray,
    b1: np.ndarray,
    w2: np.ndarray,
    b2: np.ndarray,
    x: np.ndarray,
    targets: np.ndarray,
) -> tuple[float, dict[str, np.ndarray]]:
    """Batch-mean BCE loss and its analytic gradients.

    ``x`` is a (batch, 5) matrix of already-scaled features; ``targets``
    is the matching (batch, 2) one-hot matrix.  Exposed separately so the
    gradients can be validated against finite differences.
    """
    batch = x.shape[0]
    z1 = x @ w1.T + b1
    h = np.maximum(0.0, z1)
    y = _sigmoid(h @ w2.T + b2)

    eps = 1e-12
    y_clipped = np.clip(y, eps, 1.0 - eps)
    loss = float(
        -np.sum(targets * np.log(y_clipped) + (1.0 - targets) * np.log(1.0 - y_clipped)) / batch
    )

    dz2 = (y - targets) / batch            # (batch, 2)
    dw2 = dz2.T @ h                        # (2, 3)
    db2 = dz2.sum(axis=0)
    dh = dz2 @ w2                          # (batch, 3)
    dz1 = dh * (z1 > 0.0)
    dw1 = dz1.T @ x                        # (3, 5)
    db1 = dz1.sum(axis=0)
    return loss, {"w1": dw1, "b1": db1, "w2": dw2, "b2": db2}


def train(
    dataset: Sequence[tuple[WordFeatureVector, Complexity]],
    config: TrainConfig = TrainConfig(),
) -> ComplexityClassifier:
    """Fit the classifier with ADAM; deterministic for a fixed seed.

    The dataset must contain both classes.  Per-epoch full-dataset loss is
    recorded on the returned classifier's ``loss_history``.
    """
    if not dataset:
        raise ValueError("training dataset is empty")
    labels = {label for _, label in dataset}
    if len(labels) < 2:
        raise ValueError("training dataset must contain both classes")

    x_raw = np.stack([feats.as_array() for feats, _ in dataset])
    targets = np.stack([_one_hot(label) for _, label in dataset])

    mean = x_raw.mean(axis=0)
    std = x_raw.std(axis=0)
    std[std == 0.0] = 1.0
    x = (x_raw - mean) / std

    rng = np.random.default_rng(config.seed)
    params = {
        "w1": rng.normal(0.0, np.sqrt(2.0 / N_FEATURES), (N_HIDDEN, N_FEATURES)),
        "b1": np.zeros(N_HIDDEN),
        "w2": rng.normal(0.0, np.sqrt(2.0 / N_HIDDEN), (N_OUTPUTS, N_HIDDEN)),
        "b2": np.zeros(N_OUTPUTS),
    }
    m_t = {k: np.zeros_like(v) for k, v in params.items()}
    v_t = {k: np.zeros_like(v) for k, v in params.items()}
    step = 0
    n = x.shape[0]
    history = []

    for _epoch in range(config.epochs):
        order = rng.permutation(n)
        for start in range(0, n, config.batch_size):
            idx = order[start : start + config.batch_size]
            _, grads = loss_and_gradients(
                params["w1"], params["b1"], params["w2"], params["b2"],
                x[idx], targets[idx],
            )
            step += 1
            for key in params:
                m_t[key] = config.beta1 * m_t[key] + (1.0 - config.beta1) * grads[key]
                v_t[key] = config.beta2 * v_t[key] + (1.0 - config.beta2) * grads[key] ** 2
                m_hat = m_t[key] / (1.0 - config.beta1 ** step)
                v_hat = v_t[key] / (1.0 - config.beta2 ** step)
                params[key] = params[key] - config.learning_rate * m_hat / (
                    np.sqrt(v_hat) + config.adam_eps
                )
        epoch_loss, _ = loss_and_gradients(
            params["w1"], params["b1"], params["w2"], params["b2"], x, targets
        )
        history.append(epoch_loss)

    return ComplexityClassifier(
        w1=params["w1"],
        b1=params["b1"],
        w2=params["w2"],
        b2=params["b2"],
        scaler_mean=mean,
        scaler_std=std,
        loss_history=history,
    )


_ARRAY_ORDER = ("w1", "b1", "w2", "b2", "scaler_mean", "scaler_std")
_ARRAY_SHAPES = {
    "w1": (N_HIDDEN, N_FEATURES),
    "b1": (N_HIDDEN,),
    "w2": (N_OUTPUTS, N_HIDDEN),
    "b2": (N_OUTPUTS,),
    "scaler_mean": (N_FEATURES,),
    "scaler_std": (N_FEATURES,),
}


def save_classifier(classifier: ComplexityClassifier, path) -> None:
    """Write the versioned binary file; float64 little-endian throughout."""
    arrays = {
        "w1": classifier.w1, "b1": classifier.b1,
        "w2": classifier.w2, "b2": classifier.b2,
        "scaler_mean": classifier.scaler_mean, "scaler_std": classifier.scaler_std,
    }
    with open(path, "wb") as fh:
        fh.write(MLP_MAGIC + b"\n")
        for name in _ARRAY_ORDER:
            arr = np.ascontiguousarray(arrays[name], dtype="<f8")
            if arr.shape != _ARRAY_SHAPES[name]:
                raise ValueError(f"{name} has shape {arr.shape}, expected {_ARRAY_SHAPES[name]}")
            fh.write(arr.tobytes())


def load_classifier(path) -> ComplexityClassifier:
    """Read a file written by :func:`save_classifier`; bit-exact round-trip."""
    with open(path, "rb") as fh:
        magic = fh.read(len(MLP_MAGIC) + 1)
        if magic != MLP_MAGIC + b"\n":
            raise ValueError(f"{path!r} is not a {MLP_MAGIC.decode()} classifier file")
        arrays = {}
        for name in _ARRAY_ORDER:
            shape = _ARRAY_SHAPES[name]
            count = int(np.prod(shape))
            raw = fh.read(count * 8)
            if len(raw) != count * 8:
                raise ValueError(f"{path!r}: truncated array {name}")
            arrays[name] = np.frombuffer(raw, dtype="<f8").reshape(shape).copy()
        if fh.read(1):
            raise ValueError(f"{path!r}: trailing bytes after weight tables")
    return ComplexityClassifier(
        w1=arrays["w1"], b1=arrays["b1"], w2=arrays["w2"], b2=arrays["b2"],
        scaler_mean=arrays["scaler_mean"], scaler_std=arrays["scaler_std"],
    )


def is_classifier_file(path) -> bool:
    """Sniff whether ``path`` holds classifier weights rather than a lexicon."""
    try:
        with open(path, "rb") as fh:
            return fh.read(len(MLP_MAGIC)) == MLP_MAGIC
    except OSError:
        return False
