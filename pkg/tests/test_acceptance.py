"""Acceptance suite: ten criteria, one test (and one -v line) each.

Everything runs on the default configuration (1-d grid of 256 points on a
torus of length 2*pi, top band 6, seed 20260813) against the bundled
baseline.  Each test re-checks the headline numbers recorded in the reports,
enforces the agreed tolerances, and holds the measured runtime under the
agreed budget.  Results are also accumulated for a summary table printed at
the end of the session.
"""

import time

import numpy as np
import pytest

import tlmkit as tk
import conftest

CFG = tk.SuiteConfig()


def _register(name, ok, note):
    conftest.ACCEPTANCE_RESULTS[name] = ("PASS" if ok else "FAIL", note)
    assert ok, f"{name}: {note}"


def _all_pass(reports):
    return all(r.verdict == "pass" for r in reports)


@pytest.fixture(scope="module")
def baseline():
    return tk.BaselineStore.bundled()


@pytest.fixture(scope="module")
def morrey_reports():
    return {r.check: r for r in tk.run_morrey_suite(CFG)}


@pytest.fixture(scope="module")
def interp_reports(baseline):
    return {r.check: r for r in tk.run_interp_suite(CFG, baseline)}


def test_criterion_01_partition_of_unity():
    t0 = time.perf_counter()
    reports = tk.run_partition_suite(CFG)
    elapsed = time.perf_counter() - t0
    grids = {(r.parameters["dim"], r.parameters["points"], r.parameters["j_max"])
             for r in reports}
    worst = max(r.lhs for r in reports)
    ok = (_all_pass(reports) and worst <= 1e-12
          and grids == {(1, 256, 6), (2, 128, 5)} and elapsed < 1.0)
    _register("criterion-01 partition-of-unity", ok,
              f"worst residual {worst:.3g} on {sorted(grids)} in {elapsed:.2f}s")


def test_criterion_02_morrey_collapse(morrey_reports):
    rep = morrey_reports["morrey-collapse"]
    ok = (rep.verdict == "pass" and rep.lhs <= 1e-10
          and rep.parameters["n_checked"] == 50 * 3 and rep.runtime < 5.0)
    _register("criterion-02 morrey-collapse", ok,
              f"worst relative gap {rep.lhs:.3g} over 50 functions "
              f"in {rep.runtime:.2f}s")


def test_criterion_03_morrey_oracle(morrey_reports):
    rep = morrey_reports["morrey-oracle"]
    values = rep.details["values"]
    ok = (rep.verdict == "pass" and rep.lhs <= 0.05
          and rep.details["monotone"] and len(values) == 3
          and rep.runtime < 5.0)
    _register("criterion-03 morrey-oracle", ok,
              f"indicator norm {values[-1]:.6f} vs 2^(1/4)={2**0.25:.6f} "
              f"(rel err {rep.lhs:.3g}), refinements {[f'{v:.4f}' for v in values]}, "
              f"in {rep.runtime:.2f}s")


def test_criterion_04_exact_scalar_bounds():
    t0 = time.perf_counter()
    reports = {r.check: r for r in tk.run_scalar_exact_suite(CFG)}
    elapsed = time.perf_counter() - t0
    power = reports["sequence-power"]
    tail = reports["psi-tail"]
    ok = (_all_pass(reports.values())
          and power.details["failures"] == 0 and tail.details["failures"] == 0
          and power.parameters["n_sequences"] == 10000
          and tail.parameters["n_checked"] == 3 * 2 * 20 * 20
          and elapsed < 30.0)
    _register("criterion-04 exact-scalar-bounds", ok,
              f"0 failures over {power.parameters['n_sequences']} sequences and "
              f"{tail.parameters['n_checked']} tail points in {elapsed:.2f}s")


def test_criterion_05_empirical_scalar_constants(baseline):
    t0 = time.perf_counter()
    reports = tk.run_scalar_empirical_suite(CFG, baseline)
    elapsed = time.perf_counter() - t0
    finite = all(np.isfinite(r.empirical_constant) for r in reports)
    gated = all(r.baseline_constant is not None
                and r.baseline_constant / 1.1 <= r.empirical_constant
                <= r.baseline_constant * 1.1
                for r in reports)
    ok = _all_pass(reports) and finite and gated and elapsed < 60.0
    _register("criterion-05 empirical-scalar-constants", ok,
              f"{len(reports)} constants finite, stable, within 10% of baseline "
              f"in {elapsed:.2f}s")


def test_criterion_06_interpolation_inequality():
    t0 = time.perf_counter()
    reports = tk.run_holder_suite(CFG)
    elapsed = time.perf_counter() - t0
    norm_reps = [r for r in reports if r.check.startswith("norm-holder")]
    worst = max(r.lhs for r in norm_reps)
    n_fns = {r.parameters["n_functions"] for r in norm_reps}
    ok = (_all_pass(reports) and len(norm_reps) == 5 and n_fns == {100}
          and worst <= 1.0 + 1e-6 and elapsed < 120.0)
    _register("criterion-06 interpolation-inequality", ok,
              f"worst mid/endpoint ratio {worst:.9f} over 100 functions x 5 "
              f"setups in {elapsed:.2f}s")


def test_criterion_07_reconstruction_and_derivative(interp_reports):
    recon = interp_reports["reconstruction"]
    anchor = interp_reports["contour-anchor"]
    order = interp_reports["derivative-order"]
    elapsed = recon.runtime + anchor.runtime + order.runtime
    ok = (recon.verdict == anchor.verdict == order.verdict == "pass"
          and recon.lhs <= 1e-10 and anchor.lhs == 0.0 and order.lhs >= 1.9
          and elapsed < 30.0)
    _register("criterion-07 reconstruction-and-derivative", ok,
              f"midpoint defect {recon.lhs:.3g}, anchor exactly {anchor.lhs}, "
              f"difference order {order.lhs:.3f} in {elapsed:.2f}s")


def test_criterion_08_boundary_lipschitz(interp_reports):
    reps = [interp_reports["lipschitz[side=0]"], interp_reports["lipschitz[side=1]"]]
    elapsed = sum(r.runtime for r in reps)
    spreads = [r.details["spread"] for r in reps]
    gated = all(r.baseline_constant is not None
                and r.empirical_constant <= r.baseline_constant * 1.1
                for r in reps)
    counted = all(r.parameters["n_functions"] == 20
                  and r.parameters["n_pairs"] == 10 for r in reps)
    ok = (_all_pass(reps) and gated and counted
          and max(spreads) <= 3.0 and elapsed < 120.0)
    _register("criterion-08 boundary-lipschitz", ok,
              f"constants {[f'{r.empirical_constant:.4f}' for r in reps]} within "
              f"10% of baseline, spreads {[f'{s:.2f}' for s in spreads]} <= 3, "
              f"in {elapsed:.2f}s")


def test_criterion_09_maximal_stability(baseline):
    t0 = time.perf_counter()
    reports = tk.run_maximal_suite(CFG, baseline)
    elapsed = time.perf_counter() - t0
    combos = {r.check for r in reports if r.check.startswith("vector-maximal")}
    want = {"vector-maximal[p=4,q=2,r=2]", "vector-maximal[p=6,q=3,r=3]",
            "vector-maximal[p=4,q=2,r=inf]"}
    finite = all(np.isfinite(r.empirical_constant) for r in reports)
    drifts = [r.details["drift"] for r in reports if "drift" in r.details]
    ok = (_all_pass(reports) and combos == want and finite
          and max(drifts) <= 0.2 and elapsed < 120.0)
    _register("criterion-09 maximal-stability", ok,
              f"ratios finite for {len(reports)} checks, worst 128->256 drift "
              f"{max(drifts):.3f} <= 0.2 in {elapsed:.2f}s")


def test_criterion_10_vanishing_tail(baseline):
    t0 = time.perf_counter()
    reports = {r.check: r for r in tk.run_diamond_suite(CFG, baseline)}

    # explicit sweep: band-limited inputs have exactly zero remainders
    spec = CFG.spec()
    family = tk.build_family(spec, CFG.j_max, "plain")
    sampler = CFG.sampler()
    params = tk.SpaceParams(4.0, 2.0, 2.0, 0.5)
    tails_zero = seqs_zero = verdicts_ok = True
    for band in (2, 3, 4):
        f = tk.random_bandlimited(spec, band, CFG.seed + band)
        tails_zero &= all(tk.diamond_tail(f, family, params, sampler, n) == 0.0
                          for n in range(band, CFG.j_max + 1))
        rep = tk.diamond_criterion(f, family, params, sampler)
        verdicts_ok &= rep.verdict == "pass"
        seqs_zero &= all(v == 0.0 for seq in rep.details["norm_sequences"].values()
                         for v in seq[band + 1:])
    elapsed = time.perf_counter() - t0

    persistent = reports["diamond-persistent"]
    ok = (_all_pass(reports.values()) and tails_zero and seqs_zero and verdicts_ok
          and persistent.details["criterion_verdict"] == "not-decided"
          and elapsed < 60.0)
    _register("criterion-10 vanishing-tail", ok,
              f"bands 2..4: remainders exactly 0.0 (tails {tails_zero}, gated "
              f"sequences {seqs_zero}), persistent profile "
              f"{persistent.details['criterion_verdict']}, in {elapsed:.2f}s")
