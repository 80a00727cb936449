"""Python-facing smoke tests for the compiled module."""

import math
import random

import pytest

try:
    import niafs
except ImportError:
    import _niafs as niafs


def test_surface():
    assert set(niafs.algorithms()) >= {"PSO", "ABC", "CuckooSearch", "GravitationalSearch"}
    assert len(niafs.algorithms()) == 11
    assert "MLP" in niafs.classifiers()


def test_minimize_builtin_sphere():
    out = niafs.minimize_builtin("sphere", 5, algorithm="CuckooSearch",
                                 population=20, max_evaluations=8000, seed=7)
    assert out["best_fitness"] <= 1e-2
    assert out["evaluations_used"] <= 8000
    again = niafs.minimize_builtin("sphere", 5, algorithm="CuckooSearch",
                                   population=20, max_evaluations=8000, seed=7)
    assert again["best_position"] == out["best_position"]


def test_minimize_python_callable():
    out = niafs.minimize(lambda x: (x[0] - 2.0) ** 2, [0.0], [4.0],
                         algorithm="PSO", population=20, max_evaluations=2000, seed=42)
    assert abs(out["best_position"][0] - 2.0) <= 0.05


def test_metrics_exact():
    assert niafs.accuracy([1, 1, 0], [1, 0, 0]) == pytest.approx(2 / 3)
    assert niafs.f1([1, 1, 1, 0], [1, 1, 0, 1]) == pytest.approx(2 / 3)
    assert niafs.auc([0.9, 0.8, 0.3, 0.1], [1, 1, 0, 0]) == 1.0


def test_fit_and_predict():
    rng = random.Random(3)
    X, y = [], []
    for _ in range(60):
        label = rng.random() < 0.5
        base = 0.8 if label else 0.2
        X.append([base + rng.uniform(-0.1, 0.1), rng.random()])
        y.append(int(label))
    model = niafs.fit("DecisionTree", X, y, seed=1)
    assert model.predict(X) == y
    scores = model.score(X)
    assert all(0.0 <= s <= 1.0 for s in scores)


def test_select_features_planted():
    rng = random.Random(11)
    X, y = [], []
    for _ in range(200):
        row = [rng.random() for _ in range(5)]
        label = int(row[0] > 0.5)
        if abs(row[0] - 0.5) < 0.1:
            row[0] = 0.8 if label else 0.2
        X.append(row)
        y.append(label)
    out = niafs.select_features(X, y, algorithm="CuckooSearch", seed=5,
                                population=12, max_evaluations=400)
    assert out["mask"][0] is True or out["mask"][0] == 1
    assert 1 <= out["count"] <= 5
    assert math.isfinite(out["fitness"])
