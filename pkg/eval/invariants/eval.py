#!/usr/bin/env python3
"""
Evaluation script for invariant dimensions, tensor decompositions, Littlewood-Richardson coefficients,
Wronski degrees and lifted partitions.
"""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Optional

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.rep_engine import fold_decompose, invariant_dim_A, invariant_dim_BC, lr_coefficient
from src.settings_config import get_lie_type
from src.strata import wronski_degree_A, wronski_degree_BC
from src.weights import assoc_partition, parse_partition, parse_weight, parse_weight_list

# Configure logging
logging.basicConfig(
    level=logging.WARNING,  # Suppress INFO logs during eval
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)


def _invdim_A(args: Dict) -> int:
    N = args["N"]
    return invariant_dim_A([parse_partition(item, N) for item in args["weights"].split(";")], N)


def _invdim_BC(args: Dict) -> int:
    rs = get_lie_type(args["type"], args["rank"])
    return invariant_dim_BC(rs, parse_weight_list(args["weights"], rs))


def _lr(args: Dict) -> int:
    N = args["N"]
    lam, mu, nu = (parse_partition(args[key], N) for key in ("lam", "mu", "nu"))
    return lr_coefficient(lam, mu, nu, N)


def _assoc(args: Dict) -> str:
    rs = get_lie_type(args["type"], args["rank"])
    lam = assoc_partition(parse_weight(args["weight"], rs), args["k"], args["N"])
    return ",".join(str(p) for p in lam.parts)


def _tensor(args: Dict) -> list[str]:
    """Components as "weight: multiplicity", highest coordinates first"""
    rs = get_lie_type(args["type"], args["rank"])
    factors = [w.coords for w in parse_weight_list(args["weights"], rs)]
    return [
        f"{','.join(str(c) for c in weight)}: {m}"
        for weight, m in sorted(fold_decompose(rs, factors).items(), reverse=True)
    ]


COMPUTATIONS: Dict[str, Callable[[Dict], Any]] = {
    "invdim_A": _invdim_A,
    "invdim_BC": _invdim_BC,
    "lr": _lr,
    "tensor": _tensor,
    "wronski_A": lambda args: wronski_degree_A(args["N"], args["d"]),
    "wronski_BC": lambda args: wronski_degree_BC(args["N"], args["d"]),
    "assoc": _assoc,
}


def run_single_eval(test_case: Dict) -> Dict[str, Any]:
    """Run evaluation for a single test case"""
    name = test_case["name"]
    kind = test_case["kind"]
    expected = test_case["expected"]

    try:
        actual = COMPUTATIONS[kind](test_case["args"])
    except Exception as e:
        print(f"⚠️  {name}: ERROR ({type(e).__name__}: {e})")
        return {"name": name, "kind": kind, "status": "ERROR", "error": f"{type(e).__name__}: {e}"}

    passed = actual == expected
    mark = "✅" if passed else "❌"
    print(f"{mark} {name}: expected {expected}, got {actual}")
    return {
        "name": name,
        "kind": kind,
        "status": "PASS" if passed else "FAIL",
        "expected": expected,
        "actual": actual,
    }


def main(kind: Optional[str] = None):
    """Main evaluation function"""
    print("=" * 60)
    print("INVARIANTS EVALUATION")
    print("=" * 60 + "\n")

    eval_dir = Path(__file__).parent
    ground_truth_path = eval_dir / "ground_truth.json"

    with open(ground_truth_path, "r") as f:
        ground_truth = json.load(f)

    results = [
        run_single_eval(test_case)
        for test_case in ground_truth["test_cases"]
        if kind is None or test_case["kind"] == kind
    ]

    print("\n" + "=" * 60)
    print("OVERALL RESULTS")
    print("=" * 60)

    total_tests = len(results)
    passed = sum(1 for r in results if r["status"] == "PASS")
    failed = sum(1 for r in results if r["status"] == "FAIL")
    errors = sum(1 for r in results if r["status"] == "ERROR")

    print(f"\nTotal Tests: {total_tests}")
    print(f"✅ Passed: {passed}")
    print(f"❌ Failed: {failed}")
    print(f"⚠️  Errors: {errors}")

    by_kind: Dict[str, Dict[str, int]] = {}
    for r in results:
        counts = by_kind.setdefault(r["kind"], {"passed": 0, "total": 0})
        counts["total"] += 1
        counts["passed"] += r["status"] == "PASS"
    print("\nBy kind:")
    for name, counts in by_kind.items():
        print(f"  {name}: {counts['passed']}/{counts['total']}")

    results_path = eval_dir / "eval_results.json"
    with open(results_path, "w") as f:
        json.dump(
            {
                "summary": {
                    "total_tests": total_tests,
                    "passed": passed,
                    "failed": failed,
                    "errors": errors,
                    "pass_rate": passed / total_tests if total_tests > 0 else 0,
                    "by_kind": by_kind,
                },
                "results": results,
            },
            f,
            indent=2,
        )

    print(f"\nDetailed results saved to: {results_path}")

    if failed > 0 or errors > 0:
        sys.exit(1)
    else:
        print("\n✅ All tests passed!")
        sys.exit(0)


if __name__ == "__main__":
    import argparse

    parser = argparse.ArgumentParser(description="Run invariants evaluation")
    parser.add_argument(
        "--kind",
        type=str,
        default=None,
        choices=sorted(COMPUTATIONS),
        help="Only run test cases of one kind",
    )
    args = parser.parse_args()

    main(kind=args.kind)
