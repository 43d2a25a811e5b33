#!/usr/bin/env python3
"""Solve an LP file with HiGHS and write a plain solution file.

Usage as a backend:
    srdg solve inst.json --engine milp \
        --solver-cmd 'python3 tools/highs_solve.py {model} {solution}' --solver-dialect plain
"""
import sys

import highspy


def main(model_path: str, solution_path: str) -> int:
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    if h.readModel(model_path) != highspy.HighsStatus.kOk:
        print(f"cannot read {model_path}", file=sys.stderr)
        return 1
    h.run()
    status = h.getModelStatus()
    with open(solution_path, "w") as out:
        if status == highspy.HighsModelStatus.kOptimal:
            out.write("status optimal\n")
            out.write(f"objective {h.getInfo().objective_function_value}\n")
            values = h.getSolution().col_value
            lp = h.getLp()
            for name, value in zip(lp.col_names_, values):
                out.write(f"{name} {value}\n")
        elif status == highspy.HighsModelStatus.kInfeasible:
            out.write("status infeasible\n")
        else:
            out.write(f"status {h.modelStatusToString(status).replace(' ', '_')}\n")
    return 0


if __name__ == "__main__":
    if len(sys.argv) != 3:
        print(__doc__, file=sys.stderr)
        sys.exit(2)
    sys.exit(main(sys.argv[1], sys.argv[2]))
