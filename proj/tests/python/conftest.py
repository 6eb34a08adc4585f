import os
import sys

# the CMake test target points this at the built extension
module_dir = os.environ.get("DGV_MODULE_DIR")
if module_dir and module_dir not in sys.path:
    sys.path.insert(0, module_dir)
