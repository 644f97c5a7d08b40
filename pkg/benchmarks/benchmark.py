import os
import statistics
import subprocess
import sys
import time

python = sys.executable
number_of_runs = 3  # We take the mean and spread of this many runs.

# Suites and the grid each one is timed at; None means the suite default.
suites = [
    ("small_cases", None),
    ("formula_vs_oracle", 5),
    ("monotonicity", None),
    ("tau_minimality", None),
    ("dichotomy", None),
    ("existence", None),
    ("identities", None),
    ("barnette_truncations", 5),
    ("tightness", 6),
    ("facet_census", 6),
    ("corpus_bounds", 5),
    ("properties", 4),
]

workers = os.environ.get("POLYLB_WORKERS", "1")

print(f"polylb suite timings, {number_of_runs} runs each, {workers} worker(s)")
print()
print("| suite | d_max | mean | stdev | exit |")
print("| :--- | ---: | ---: | ---: | ---: |")

for name, d_max in suites:
    cmd = [python, "-m", "polylb", "verify", "--suite", name, "--format", "csv"]
    if d_max is not None:
        cmd += ["--d-max", str(d_max)]
    times = []
    code = 0
    for i in range(number_of_runs):
        start = time.perf_counter()
        result = subprocess.run(cmd, stdout=subprocess.PIPE, stderr=subprocess.PIPE)
        times.append(time.perf_counter() - start)
        code = max(code, result.returncode)
        if result.returncode not in (0, 1):
            print(result.stderr.decode("utf-8"), file=sys.stderr)
    spread = statistics.stdev(times) if len(times) > 1 else 0.0
    shown = "default" if d_max is None else str(d_max)
    print(f"| {name} | {shown} | {statistics.mean(times):.2f}s | {spread:.2f}s | {code} |")
