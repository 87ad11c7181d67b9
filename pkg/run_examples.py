import json
import time
from pathlib import Path

from run import configure_logging
from utils.runners import run_examples, write_products

RESULTS_DIR = Path("results", time.strftime("%Y%m%d-%H%M%S"))

# create results directory if it does not exist
if not RESULTS_DIR.exists():
    RESULTS_DIR.mkdir(parents=True)

# Settings to reproduce the worked examples:
#   Every entry names a problem file, the ideal I (default "I") and, where needed, the
#   auxiliary ideal J (default: the maximal ideal). "sharp": True replaces (I, J) by the
#   deformation of I and (s). "expected" is compared with the result text; entries
#   without it are only reported.
settings = {
    "examples": [
        {"name": "infinite_form_ideal", "file": "problems/infinite.ideal", "task": "form-ideal", "expected": "(x^2, x*y, y^5)"},
        {"name": "infinite_colength", "file": "problems/infinite.ideal", "task": "colength", "expected": "6"},
        {"name": "infinite_form_probe", "file": "problems/infinite.ideal", "task": "form-probe", "kmax": 4, "expected": "FailAt(2)"},
        {"name": "marc_spread", "file": "problems/marc.ideal", "task": "spread", "expected": "3"},
        {"name": "marc_growth", "file": "problems/marc.ideal", "aux": "m", "task": "growth", "e": 2, "kmax": 4, "expected": "1 3 6 10"},
        {"name": "cover_spread", "file": "problems/cover.ideal", "task": "spread", "expected": "3"},
        {"name": "cover_growth", "file": "problems/cover.ideal", "aux": "m", "task": "growth", "e": 3, "kmax": 8, "ks": [2, 4, 6, 8], "expected": "1 7 22 50"},
        {"name": "cover_veronese", "file": "problems/cover.ideal", "aux": "m", "task": "veronese-probe", "d": 2, "kmax": 3, "expected": "AllPass"},
        {"name": "depending_q_form_probe", "file": "problems/depending_q.ideal", "task": "form-probe", "kmax": 3, "expected": "AllPass"},
        {"name": "depending_f5_form_probe", "file": "problems/depending_f5.ideal", "task": "form-probe", "kmax": 3, "expected": "AllPass"},
        {"name": "depending_f2_form_probe", "file": "problems/depending_f2.ideal", "task": "form-probe", "kmax": 3, "expected": "FailAt(2)"},
        {"name": "new_form_probe", "file": "problems/new.ideal", "task": "form-probe", "kmax": 3, "expected": "FailAt(2)"},
        {"name": "new_veronese", "file": "problems/new.ideal", "sharp": True, "task": "veronese-probe", "d": 1, "kmax": 3, "expected": "FailAt(2)"},
        {"name": "new_growth", "file": "problems/new.ideal", "sharp": True, "task": "growth", "e": 3, "kmax": 3, "expected": "0 2 8"},
    ],
}

configure_logging()

# run every example and collect the summaries and tables
example_rows, example_summary, products = run_examples(settings)

# save the settings for reference
with open(RESULTS_DIR.joinpath("example_settings.json"), "w", encoding="utf-8") as f:
    f.write(json.dumps(settings, indent=2))
# save the per-example results
with open(RESULTS_DIR.joinpath("example_results.json"), "w", encoding="utf-8") as f:
    f.write(json.dumps(example_rows, indent=2))
# save the tables and probe reports
write_products(products, RESULTS_DIR)
# save the results summary
example_summary.to_csv(RESULTS_DIR.joinpath("example_results_summary.csv"), index=False)
print(example_summary.to_string(index=False))
