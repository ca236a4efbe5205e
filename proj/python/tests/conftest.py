import glob
import sys
from pathlib import Path

# make the package and a cmake-built module importable without installation
root = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(root / "python"))
for build_dir in (root / "build",):
    if glob.glob(str(build_dir / "_quadtile*.so")):
        sys.path.insert(0, str(build_dir))
