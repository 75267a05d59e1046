"""The same pipeline driven through files and the command-line interface.

Everything on disk is a portable anymap: images are binary PPM (P6),
watermarks are PBM (P1/P4). Output is written atomically and all numbers
print with fixed formatting, so runs are byte-reproducible.
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from lumamark.testimages import write_corpus


def run(*args):
    cmd = [sys.executable, "-m", "lumamark", *args]
    print("$ lumamark " + " ".join(args))
    result = subprocess.run(cmd, capture_output=True, text=True)
    if result.stdout:
        print(result.stdout, end="")
    if result.returncode != 0:
        print(result.stderr, end="")
    print(f"(exit {result.returncode})\n")
    return result


def main():
    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        write_corpus(root)
        img = str(root / "soft_gradient.ppm")
        logo = str(root / "logo.pbm")
        marked = str(root / "marked.ppm")
        attacked = str(root / "attacked.ppm")
        recovered = str(root / "recovered.pbm")

        run("embed", img, logo, marked, "--dump-plan", str(root / "plan.txt"))
        run("attack", marked, attacked, "--compress-quality", "0.75")
        run("extract", img, attacked, recovered, "--reference", logo)
        run("metrics", img, attacked)
        run("report", img, logo)

        # failure modes are exit codes, not stack traces
        run("extract", img, str(root / "missing.ppm"), recovered)


if __name__ == "__main__":
    main()
