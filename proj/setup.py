import glob
import sys

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("SWINGBF_BUILD_JOBS").install()

# Everything under src/ except the CLI entry point.
core_sources = sorted(s for s in glob.glob("src/*.cpp") if not s.endswith("main.cpp"))

thread_flags = [] if sys.platform == "win32" else ["-pthread"]

setup(
    ext_modules=[
        Pybind11Extension(
            "swingbf._core",
            sources=core_sources + ["bindings/module.cpp"],
            include_dirs=["include"],
            cxx_std=20,
            extra_compile_args=thread_flags,
            extra_link_args=thread_flags,
        )
    ],
    cmdclass={"build_ext": build_ext},
)
