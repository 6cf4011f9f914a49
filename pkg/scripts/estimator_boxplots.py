#!/usr/bin/env python3
"""Boxplot data for the four scale estimators over replicated Levy samples.

For each sample size, emits the Monte Carlo quartiles and whisker bounds of
the QCM, QCV, MLE and COV estimates at a fixed true scale, as one JSON record
per (estimator, n). Feed the output to any plotting tool.
"""
import argparse
import json

import numpy as np

from levygof.condmoments import QuantileSplit
from levygof.distributions import LevyParams, sample_levy
from levygof.estimators import (estimate_cov, estimate_mle, estimate_qcm,
                                estimate_qcv)
from levygof.streams import RandomStream

# Windows used for the estimator comparison study.
QCM_SPLIT = QuantileSplit(0.2, 0.48)
QCV_SPLIT = QuantileSplit(0.0, 0.7)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--c", type=float, default=2.0)
    ap.add_argument("--n-grid", default="20,50,100,200")
    ap.add_argument("--replicates", type=int, default=10000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    methods = {
        "QCM": lambda x: estimate_qcm(x, QCM_SPLIT).value,
        "QCV": lambda x: estimate_qcv(x, QCV_SPLIT).value,
        "MLE": lambda x: estimate_mle(x).value,
        "COV": lambda x: estimate_cov(x).value,
    }
    for n in (int(v) for v in args.n_grid.split(",")):
        values = {name: np.empty(args.replicates) for name in methods}
        for i in range(args.replicates):
            x = sample_levy(LevyParams(c=args.c), n, RandomStream(args.seed, i))
            for name, fn in methods.items():
                values[name][i] = fn(x)
        for name, v in values.items():
            q1, med, q3 = np.percentile(v, [25, 50, 75])
            print(json.dumps({
                "method": name, "n": n, "c": args.c,
                "median": med, "q1": q1, "q3": q3, "iqr": q3 - q1,
                "whisker_low": float(np.percentile(v, 2.5)),
                "whisker_high": float(np.percentile(v, 97.5)),
            }))


if __name__ == "__main__":
    main()
