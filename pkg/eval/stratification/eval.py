#!/usr/bin/env python3
"""
Evaluation script for stratum enumeration and degeneration posets.
Compares enumerated labels against ground truth and reports precision, recall and F1.
"""

import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.settings_config import get_family
from src.strata import build_poset, enumerate_strata_BC, reduced_wronski_degree, top_strata_BC

# Configure logging
logging.basicConfig(
    level=logging.WARNING,  # Suppress INFO logs during eval
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)


@dataclass
class EvalMetrics:
    """Metrics for evaluation"""

    precision: float
    recall: float
    f1_score: float
    true_positives: int
    false_positives: int
    false_negatives: int


def calculate_metrics(expected: list[str], actual: list[str]) -> EvalMetrics:
    """Precision, recall and F1 of the enumerated labels"""
    expected_set, actual_set = set(expected), set(actual)
    true_positives = len(expected_set & actual_set)
    false_positives = len(actual_set - expected_set)
    false_negatives = len(expected_set - actual_set)

    precision = true_positives / len(actual_set) if actual_set else 0
    recall = true_positives / len(expected_set) if expected_set else 0
    f1_score = 2 * (precision * recall) / (precision + recall) if (precision + recall) > 0 else 0

    return EvalMetrics(
        precision=precision,
        recall=recall,
        f1_score=f1_score,
        true_positives=true_positives,
        false_positives=false_positives,
        false_negatives=false_negatives,
    )


def run_top_eval(test_case: Dict) -> Dict[str, Any]:
    """Top-dimensional strata of sGr(N,d) and their reduced Wronski degrees"""
    expected = test_case["expected"]["top_degrees"]
    labels = top_strata_BC(test_case["N"], test_case["d"], test_case.get("max_cells"))
    actual = {str(label): reduced_wronski_degree(label) for label in labels}
    metrics = calculate_metrics(list(expected), list(actual))
    passed = actual == expected

    print(f"\nStatus: {'PASS' if passed else 'FAIL'}")
    for label, degree in expected.items():
        mark = "✓" if actual.get(label) == degree else "✗"
        print(f"  {mark} {label}: expected {degree}, got {actual.get(label, '-')}")

    return {
        "status": "PASS" if passed else "FAIL",
        "metrics": {"precision": round(metrics.precision, 3), "recall": round(metrics.recall, 3)},
        "expected": expected,
        "actual": actual,
    }


def run_geometry_eval(test_case: Dict) -> Dict[str, Any]:
    """Stratum count, restricted degrees and invariant dimensions of sGr(N,d)"""
    expected = test_case["expected"]
    labels = enumerate_strata_BC(test_case["N"], test_case["d"], test_case.get("max_cells"))
    actual: Dict[str, Any] = {"stratum_count": len(labels)}
    checks = []

    if "stratum_count" in expected:
        checks.append(len(labels) == expected["stratum_count"])
    if "all_degrees" in expected:
        degrees = {str(label): reduced_wronski_degree(label) for label in labels}
        actual["degrees"] = degrees
        checks.append(all(v == expected["all_degrees"] for v in degrees.values()))
    if "all_invariant_dims" in expected:
        dims = {str(label): label.invariant_dim for label in labels}
        actual["invariant_dims"] = dims
        checks.append(all(v == expected["all_invariant_dims"] for v in dims.values()))

    passed = bool(labels) and all(checks)
    print(f"\nStatus: {'PASS' if passed else 'FAIL'}")
    print(f"Strata: {len(labels)}")
    for key in ("degrees", "invariant_dims"):
        for label, value in actual.get(key, {}).items():
            print(f"  {label}: {key[:-1]} {value}")

    return {"status": "PASS" if passed else "FAIL", "expected": expected, "actual": actual}


def run_poset_eval(test_case: Dict) -> Dict[str, Any]:
    """Strata, edges and (optionally) empty strata of a degeneration poset"""
    expected = test_case["expected"]
    family = get_family(test_case["family"])
    include_empty = "empty_strata" in expected
    dag = build_poset(test_case["N"], test_case["d"], family, include_empty, test_case.get("max_cells"))

    actual_strata = [str(label) for label in dag.labels()]
    metrics = calculate_metrics(expected["strata"], actual_strata)
    actual_edges = len(dag.solid_edges())
    edges_correct = actual_edges == expected["total_edges"]

    empty_correct = True
    actual_empty: Optional[list[str]] = None
    dashed_correct = True
    if include_empty:
        actual_empty = [str(node.label) for node in dag.nodes if node.empty]
        empty_correct = set(actual_empty) == set(expected["empty_strata"])
        dashed_correct = len(dag.edges) - actual_edges == expected["dashed_edges"]

    passed = metrics.f1_score == 1 and edges_correct and empty_correct and dashed_correct

    print(f"\nStatus: {'PASS' if passed else 'FAIL'}")
    print(f"Precision: {metrics.precision:.1%}")
    print(f"Recall: {metrics.recall:.1%}")
    print(f"Edges: {actual_edges}/{expected['total_edges']}")
    if metrics.false_positives > 0:
        print(f"\n⚠️  Unexpected strata: {metrics.false_positives}")
        for label in sorted(set(actual_strata) - set(expected["strata"])):
            print(f"   - {label}")
    if metrics.false_negatives > 0:
        print(f"\n⚠️  Missed strata: {metrics.false_negatives}")
        for label in sorted(set(expected["strata"]) - set(actual_strata)):
            print(f"   - {label}")

    return {
        "status": "PASS" if passed else "FAIL",
        "metrics": {
            "precision": round(metrics.precision, 3),
            "recall": round(metrics.recall, 3),
            "f1_score": round(metrics.f1_score, 3),
            "true_positives": metrics.true_positives,
            "false_positives": metrics.false_positives,
            "false_negatives": metrics.false_negatives,
        },
        "counts": {
            "expected_edges": expected["total_edges"],
            "actual_edges": actual_edges,
            "empty_strata_correct": empty_correct,
            "dashed_edges_correct": dashed_correct,
        },
        "expected": expected,
        "actual": {"strata": actual_strata, "empty_strata": actual_empty},
    }


def run_single_eval(test_case: Dict) -> Dict[str, Any]:
    """Run evaluation for a single test case"""
    name = test_case["name"]

    print(f"\n{'='*60}")
    print(f"Testing: {name}")
    print(f"Family: {test_case['family']}, N={test_case['N']}, d={test_case['d']}")
    print(f"{'='*60}")

    try:
        if "top_degrees" in test_case["expected"]:
            result = run_top_eval(test_case)
        elif "strata" not in test_case["expected"]:
            result = run_geometry_eval(test_case)
        else:
            result = run_poset_eval(test_case)
    except Exception as e:
        print(f"\nStatus: ERROR ({type(e).__name__}: {e})")
        return {"name": name, "status": "ERROR", "error": f"{type(e).__name__}: {e}"}

    return {"name": name, **result}


def main(case: Optional[str] = None):
    """Main evaluation function"""
    print("=" * 60)
    print("STRATIFICATION EVALUATION")
    print("=" * 60)

    # Load ground truth
    eval_dir = Path(__file__).parent
    ground_truth_path = eval_dir / "ground_truth.json"

    with open(ground_truth_path, "r") as f:
        ground_truth = json.load(f)

    # Run evaluations
    results = []
    for test_case in ground_truth["test_cases"]:
        if case and case != test_case["name"]:
            continue
        results.append(run_single_eval(test_case))

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

    # Save detailed results
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

    parser = argparse.ArgumentParser(description="Run stratification evaluation")
    parser.add_argument("--case", type=str, default=None, help='Run a single case, e.g. "sGr(4,6)"')
    args = parser.parse_args()

    main(case=args.case)
