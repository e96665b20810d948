"""Tabular weather data: loading, cleaning, standardization, splitting.

The single data currency of the pipeline is :class:`TabularDataset`, an
immutable feature matrix plus target vector with a named column schema.
Also hosts the pinned synthetic hourly-weather generator used by the
acceptance tests and the demos.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field, replace

import numpy as np

from . import prng
from .errors import (
    BadFoldCountError,
    ConfigError,
    ConstantColumnError,
    DimensionMismatchError,
    DirtyDataError,
    EmptyFileError,
    MissingColumnError,
    ParseError,
    TooFewRowsError,
)

KIND_FEATURE = "feature"
KIND_TARGET = "target"
KIND_EXCLUDED = "excluded"
_KINDS = (KIND_FEATURE, KIND_TARGET, KIND_EXCLUDED)


@dataclass(frozen=True)
class ColumnSchema:
    """One named column: its role in the pipeline and an informational unit."""

    name: str
    kind: str = KIND_FEATURE
    unit: str = ""

    def __post_init__(self):
        if not self.name:
            raise ConfigError("column names must be non-empty")
        if self.kind not in _KINDS:
            raise ConfigError(f"unknown column kind {self.kind!r}")


def default_schema() -> tuple[ColumnSchema, ...]:
    """The eight hourly weather columns: irradiance target plus seven features."""
    return (
        ColumnSchema("irradiance", KIND_TARGET, "W/m^2"),
        ColumnSchema("temperature", KIND_FEATURE, "degC"),
        ColumnSchema("pressure", KIND_FEATURE, "hPa"),
        ColumnSchema("humidity", KIND_FEATURE, "%"),
        ColumnSchema("wind_speed", KIND_FEATURE, "m/s"),
        ColumnSchema("wind_direction", KIND_FEATURE, "deg"),
        ColumnSchema("time_of_day", KIND_FEATURE, "h"),
        ColumnSchema("length_of_day", KIND_FEATURE, "h"),
    )


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.float64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class TabularDataset:
    """Immutable feature matrix (row-major, schema feature order) plus target."""

    schema: tuple[ColumnSchema, ...]
    rows: np.ndarray
    target: np.ndarray

    def __post_init__(self):
        names = [c.name for c in self.schema]
        if len(set(names)) != len(names):
            raise ConfigError("schema names must be unique")
        targets = [c for c in self.schema if c.kind == KIND_TARGET]
        if len(targets) != 1:
            raise ConfigError("schema must contain exactly one target column")
        object.__setattr__(self, "rows", _frozen(np.atleast_2d(self.rows)))
        object.__setattr__(self, "target", _frozen(np.asarray(self.target).ravel()))
        n_feat = sum(1 for c in self.schema if c.kind == KIND_FEATURE)
        if self.rows.shape[1] != n_feat:
            raise DimensionMismatchError(
                f"rows have {self.rows.shape[1]} columns, schema has {n_feat} features"
            )
        if self.target.shape[0] != self.rows.shape[0]:
            raise DimensionMismatchError("target length != row count")

    @property
    def row_count(self) -> int:
        return self.rows.shape[0]

    @property
    def feature_names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.schema if c.kind == KIND_FEATURE)

    @property
    def target_name(self) -> str:
        return next(c.name for c in self.schema if c.kind == KIND_TARGET)

    def feature(self, name: str) -> np.ndarray:
        return self.rows[:, self.feature_names.index(name)]

    def with_data(self, rows: np.ndarray, target: np.ndarray) -> "TabularDataset":
        return TabularDataset(self.schema, rows, target)

    def take(self, indices) -> "TabularDataset":
        return self.with_data(self.rows[indices], self.target[indices])


def load_csv(path, schema, mapping=None) -> TabularDataset:
    """Read a one-header-row CSV into a dataset.

    ``mapping`` sends schema column names to CSV header names; unmapped names
    are looked up verbatim. Rows are parsed in file order.
    """
    mapping = dict(mapping or {})
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyFileError(f"{path}: no header row") from None
        header_pos = {h: i for i, h in enumerate(header)}
        wanted = [c for c in schema if c.kind != KIND_EXCLUDED]
        cols = []
        for col in wanted:
            mapped = mapping.get(col.name, col.name)
            if mapped not in header_pos:
                raise MissingColumnError(mapped)
            cols.append((col, mapped, header_pos[mapped]))

        feat_rows, targets = [], []
        for r, record in enumerate(reader, start=1):
            feats = []
            tgt = 0.0
            for col, mapped, pos in cols:
                cell = record[pos] if pos < len(record) else ""
                try:
                    value = float(cell)
                except ValueError:
                    raise ParseError(r, mapped, cell) from None
                if col.kind == KIND_TARGET:
                    tgt = value
                else:
                    feats.append(value)
            feat_rows.append(feats)
            targets.append(tgt)

    if not feat_rows:
        raise EmptyFileError(f"{path}: no data rows")
    return TabularDataset(tuple(schema), np.array(feat_rows), np.array(targets))


def write_csv(ds: TabularDataset, path) -> None:
    """Inverse of load_csv for round-tripping generated data."""
    names = [c.name for c in ds.schema if c.kind != KIND_EXCLUDED]
    feat_names = list(ds.feature_names)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(names)
        for i in range(ds.row_count):
            record = []
            for name in names:
                if name == ds.target_name:
                    record.append(repr(float(ds.target[i])))
                else:
                    record.append(repr(float(ds.rows[i, feat_names.index(name)])))
            writer.writerow(record)


def clean(ds: TabularDataset, policy: str = "drop_row") -> TabularDataset:
    """Remove (or reject) rows containing NaN/Inf. Idempotent."""
    if policy not in ("drop_row", "fail"):
        raise ConfigError(f"unknown clean policy {policy!r}")
    ok = np.isfinite(ds.rows).all(axis=1) & np.isfinite(ds.target)
    if ok.all():
        return ds
    if policy == "fail":
        bad = int(np.flatnonzero(~ok)[0])
        raise DirtyDataError(f"non-finite value in row {bad}")
    return ds.take(ok)


@dataclass(frozen=True)
class StandardizationParams:
    """Per-feature mean and population standard deviation."""

    mean: np.ndarray
    std: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mean", _frozen(self.mean).ravel())
        object.__setattr__(self, "std", _frozen(self.std).ravel())


def fit_standardizer(ds: TabularDataset) -> StandardizationParams:
    """Population mean/stddev per feature; constant columns are rejected."""
    mean = ds.rows.mean(axis=0)
    std = ds.rows.std(axis=0)  # ddof=0: population convention
    for j, s in enumerate(std):
        if s == 0.0:
            raise ConstantColumnError(ds.feature_names[j])
    return StandardizationParams(mean, std)


def apply_standardizer(ds: TabularDataset, p: StandardizationParams) -> TabularDataset:
    if p.mean.shape[0] != ds.rows.shape[1]:
        raise DimensionMismatchError(
            f"params for {p.mean.shape[0]} features applied to {ds.rows.shape[1]}"
        )
    return ds.with_data((ds.rows - p.mean) / p.std, ds.target)


def invert_standardizer(ds: TabularDataset, p: StandardizationParams) -> TabularDataset:
    if p.mean.shape[0] != ds.rows.shape[1]:
        raise DimensionMismatchError(
            f"params for {p.mean.shape[0]} features applied to {ds.rows.shape[1]}"
        )
    return ds.with_data(ds.rows * p.std + p.mean, ds.target)


@dataclass(frozen=True)
class SplitIndices:
    train: np.ndarray
    test: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "train", np.sort(np.asarray(self.train, dtype=np.int64)))
        object.__setattr__(self, "test", np.sort(np.asarray(self.test, dtype=np.int64)))


def split_train_test(ds: TabularDataset, train_fraction: float, seed: int,
                     shuffle: bool = True) -> SplitIndices:
    """Round(train_fraction * n) rows to train, rest to test.

    shuffle=False keeps the chronological prefix as the training block.
    """
    if not 0.0 < train_fraction < 1.0:
        raise ConfigError(f"train_fraction must be in (0, 1), got {train_fraction}")
    n = ds.row_count
    if n < 2:
        raise TooFewRowsError(f"need at least 2 rows to split, got {n}")
    n_train = int(math.floor(train_fraction * n + 0.5))
    if n_train == 0 or n_train == n:
        raise TooFewRowsError(
            f"fraction {train_fraction} leaves an empty side for n={n}"
        )
    if shuffle:
        perm = prng.permutation(n, prng.STREAM_SPLIT, seed)
    else:
        perm = np.arange(n, dtype=np.int64)
    return SplitIndices(perm[:n_train], perm[n_train:])


@dataclass(frozen=True)
class FoldPlan:
    k: int
    assignments: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "assignments",
                           np.asarray(self.assignments, dtype=np.int64))

    @property
    def n(self) -> int:
        return self.assignments.shape[0]

    def val_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignments == fold)

    def train_indices(self, fold: int) -> np.ndarray:
        return np.flatnonzero(self.assignments != fold)


def make_folds(n: int, k: int, seed: int) -> FoldPlan:
    """Shuffled k-fold plan; fold sizes differ by at most one."""
    if k < 2 or k > n:
        raise BadFoldCountError(f"need 2 <= k <= n, got k={k}, n={n}")
    perm = prng.permutation(n, prng.STREAM_FOLDS, seed)
    assignments = np.empty(n, dtype=np.int64)
    assignments[perm] = np.arange(n, dtype=np.int64) % k
    return FoldPlan(k, assignments)


def encode_wind_direction(ds: TabularDataset, column: str = "wind_direction") -> TabularDataset:
    """Optional cyclic encoding: replace a degree column with its sin/cos pair.

    Off by default everywhere; the flat degree column matches the source data.
    """
    if column not in ds.feature_names:
        raise MissingColumnError(column)
    j = ds.feature_names.index(column)
    rad = ds.rows[:, j] * (math.pi / 180.0)
    schema = []
    for c in ds.schema:
        if c.name == column:
            schema.append(ColumnSchema(f"{column}_sin", KIND_FEATURE, ""))
            schema.append(ColumnSchema(f"{column}_cos", KIND_FEATURE, ""))
        else:
            schema.append(c)
    rows = np.column_stack([
        ds.rows[:, :j], np.sin(rad), np.cos(rad), ds.rows[:, j + 1:],
    ])
    return TabularDataset(tuple(schema), rows, ds.target)


# -- synthetic generator -----------------------------------------------------

# Noise-column keys of the generator; part of the reproducibility contract.
_COL_TEMPERATURE = 0
_COL_PRESSURE = 1
_COL_HUMIDITY = 2
_COL_WIND_SPEED = 3
_COL_WIND_DIRECTION = 4
_COL_IRRADIANCE = 5


def synth_generate(n_hours: int, seed: int, *,
                   temperature_coeff: float = 0.015,
                   humidity_coeff: float = 0.004,
                   wind_direction_coeff: float = 0.10) -> TabularDataset:
    """Deterministic synthetic hourly weather with a pinned noise stream.

    For hour index h (hod = h mod 24):

        clearsky      = 1000 sin(pi (hod-6)/12) for 6 <= hod <= 18, else 0
        temperature   = 15 + 10 sin(pi (hod-8)/12) + 5 sin(2 pi h/8760) + N(0,1)
        humidity      = clip(60 - 0.5 (temperature-15) + N(0,5), 5, 100)
        pressure      = 1013 + N(0,3)
        wind_speed    = |N(3,2)|
        wind_dir      = 360 U[0,1)
        length_of_day = 12 + 2 sin(2 pi h/8760)
        factor        = 0.65 + tc (temperature-15) - hc (humidity-60)
                             + wc cos(wind_dir pi/180)
        irradiance    = max(0, clearsky * factor + N(0,20)) where clearsky > 0,
                        exactly 0 where clearsky == 0

    All noise draws come from the counter hash keyed by
    (STREAM_SYNTH, seed, hour, column), columns 0..5 in the order
    temperature, pressure, humidity, wind_speed, wind_direction, irradiance.
    Coefficient overrides exist for the spatial-transfer harness (a "location
    100 miles away" is the same recipe with a shifted temperature_coeff).
    """
    if n_hours < 24:
        raise ConfigError(f"n_hours must be >= 24, got {n_hours}")
    h = np.arange(n_hours, dtype=np.int64)
    hod = (h % 24).astype(np.float64)

    def noise(col):
        return prng.normal_vec(prng.STREAM_SYNTH, seed, h.astype(np.uint64), col)

    day = (hod >= 6) & (hod <= 18)
    clearsky = np.where(day, 1000.0 * np.sin(np.pi * (hod - 6.0) / 12.0), 0.0)
    annual = np.sin(2.0 * np.pi * h / 8760.0)
    temperature = 15.0 + 10.0 * np.sin(np.pi * (hod - 8.0) / 12.0) + 5.0 * annual \
        + noise(_COL_TEMPERATURE)
    humidity = np.clip(60.0 - 0.5 * (temperature - 15.0) + 5.0 * noise(_COL_HUMIDITY),
                       5.0, 100.0)
    pressure = 1013.0 + 3.0 * noise(_COL_PRESSURE)
    wind_speed = np.abs(3.0 + 2.0 * noise(_COL_WIND_SPEED))
    wind_direction = 360.0 * prng.uniform_vec(
        prng.STREAM_SYNTH, seed, h.astype(np.uint64), _COL_WIND_DIRECTION)
    length_of_day = 12.0 + 2.0 * annual

    factor = (0.65 + temperature_coeff * (temperature - 15.0)
              - humidity_coeff * (humidity - 60.0)
              + wind_direction_coeff * np.cos(wind_direction * np.pi / 180.0))
    lit = clearsky > 0.0
    irradiance = np.where(
        lit, np.maximum(0.0, clearsky * factor + 20.0 * noise(_COL_IRRADIANCE)), 0.0)

    rows = np.column_stack([temperature, pressure, humidity, wind_speed,
                            wind_direction, hod, length_of_day])
    return TabularDataset(default_schema(), rows, irradiance)
