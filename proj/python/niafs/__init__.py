"""Nature-inspired feature selection toolkit.

Thin wrapper over the compiled ``_niafs`` module: population-based
minimizers, wrapper feature selection, from-scratch classifiers, and the
grid harness.
"""

try:
    # Installed layout: the extension sits inside this package.
    from niafs._niafs import (
        Model,
        accuracy,
        algorithms,
        auc,
        classifiers,
        f1,
        fit,
        minimize,
        minimize_builtin,
        run_grid,
        select_features,
    )
except ImportError:
    # Build-tree layout: the extension is on sys.path directly.
    from _niafs import (
        Model,
        accuracy,
        algorithms,
        auc,
        classifiers,
        f1,
        fit,
        minimize,
        minimize_builtin,
        run_grid,
        select_features,
    )

__all__ = [
    "Model",
    "accuracy",
    "algorithms",
    "auc",
    "classifiers",
    "f1",
    "fit",
    "minimize",
    "minimize_builtin",
    "run_grid",
    "select_features",
]
