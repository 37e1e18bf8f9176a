import os
import sys

# ctest points ANOSOV_LAB_STAGE at the build tree; an editable install would
# otherwise shadow it through its own import finder.
_stage = os.environ.get("ANOSOV_LAB_STAGE")
if _stage:
    sys.meta_path[:] = [f for f in sys.meta_path if not type(f).__module__.startswith("_editable_")]
    sys.path.insert(0, _stage)
    for name in [m for m in sys.modules if m == "anosov_lab" or m.startswith("anosov_lab.")]:
        del sys.modules[name]
