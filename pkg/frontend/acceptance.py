#!/usr/bin/env python3
"""End-to-end acceptance for the CNN prior component.

Pipeline:
  1. generate 50 phantom pairs at 9 views with the fewviewct CLI
     (skipped if the dataset already exists),
  2. train the CNN prior on them (overfit run),
  3. emit priors for the training sinograms,
  4. check SSIM(prior, target) >= 0.8 on the training set,
  5. run cold- and warm-started RLS on all samples and check that the
     warm starts do not lose PSNR.

Run from this directory after `npm run build`:

    python3 acceptance.py [--epochs N] [--batch-size B] [--learning-rate LR] [--fresh]
"""

from __future__ import annotations

import argparse
import subprocess
import sys
from pathlib import Path

import numpy as np

from fewviewct import (
    ImageGrid,
    ProjectionGeometry,
    ReconConfig,
    forward_project,
    load_image,
    load_sinogram,
    psnr,
    rls_reconstruct,
    ssim,
)

HERE = Path(__file__).resolve().parent
DATA = HERE / "artifacts" / "data"
MODEL = HERE / "artifacts" / "model"
PRIORS = HERE / "artifacts" / "priors"

NUM_SAMPLES = 50
VIEWS = 9
SSIM_FLOOR = 0.8


def run(cmd: list[str]) -> None:
    print("+", " ".join(cmd), flush=True)
    subprocess.run(cmd, check=True)


def ensure_dataset() -> list[str]:
    existing = sorted(DATA.glob("*_truth.json")) if DATA.is_dir() else []
    if len(existing) != NUM_SAMPLES:
        run([
            sys.executable, "-m", "fewviewct.cli", "generate",
            "--kinds", "random_ellipses", "--count", str(NUM_SAMPLES),
            "--size", "128", "--seed", "0", "--views", str(VIEWS),
            "--out", str(DATA),
        ])
        existing = sorted(DATA.glob("*_truth.json"))
    return [p.name[: -len("_truth.json")] for p in existing]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--epochs", type=int, default=400)
    parser.add_argument("--batch-size", type=int, default=10)
    parser.add_argument("--learning-rate", type=float, default=3e-3)
    parser.add_argument(
        "--fresh", action="store_true",
        help="retrain even if a model directory already exists",
    )
    args = parser.parse_args()

    sample_ids = ensure_dataset()

    if args.fresh or not (MODEL / "model.json").exists():
        run([
            "node", str(HERE / "dist" / "cli.js"), "train",
            "--views", str(VIEWS), "--data", str(DATA),
            "--out", str(MODEL),
            "--epochs", str(args.epochs),
            "--batch-size", str(args.batch_size),
            "--learning-rate", str(args.learning_rate),
        ])
    run([
        "node", str(HERE / "dist" / "cli.js"), "infer",
        "--model", str(MODEL), "--sino", str(DATA), "--out", str(PRIORS),
    ])

    failures = 0

    # training-set SSIM of the emitted priors
    ssim_vals = []
    for sid in sample_ids:
        truth = load_image(DATA / f"{sid}_truth.json")
        prior = load_image(PRIORS / f"{sid}.json")
        ssim_vals.append(ssim(prior, truth))
    mean_ssim = float(np.mean(ssim_vals))
    min_ssim = float(np.min(ssim_vals))
    ok = mean_ssim >= SSIM_FLOOR
    failures += 0 if ok else 1
    print(
        f"SECONDARY ACCEPTANCE {'PASS' if ok else 'FAIL'}: overfit SSIM: "
        f"mean {mean_ssim:.4f} (min {min_ssim:.4f}) vs floor {SSIM_FLOOR}",
        flush=True,
    )

    # warm vs cold RLS with these priors
    cfg = ReconConfig()
    cold_psnr = []
    warm_psnr = []
    for sid in sample_ids:
        truth = load_image(DATA / f"{sid}_truth.json")
        prior = load_image(PRIORS / f"{sid}.json")
        sino = load_sinogram(DATA / f"{sid}_sino{VIEWS:03d}.json")
        geom = ProjectionGeometry(truth.height, sino.angles_deg)
        assert np.allclose(
            sino.values, forward_project(truth, geom).values, atol=1e-4
        ), f"{sid}: sinogram does not match stored geometry"
        zero = ImageGrid(truth.height, truth.width,
                         np.zeros((truth.height, truth.width)))
        cold = rls_reconstruct(sino, geom, cfg, zero)
        warm = rls_reconstruct(sino, geom, cfg, prior)
        cold_psnr.append(psnr(cold.final_image, truth))
        warm_psnr.append(psnr(warm.final_image, truth))
    mean_cold = float(np.mean(cold_psnr))
    mean_warm = float(np.mean(warm_psnr))
    ok = mean_warm >= mean_cold
    failures += 0 if ok else 1
    print(
        f"SECONDARY ACCEPTANCE {'PASS' if ok else 'FAIL'}: warm-start PSNR "
        f"{mean_warm:.2f} dB vs cold {mean_cold:.2f} dB at {VIEWS} views",
        flush=True,
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
