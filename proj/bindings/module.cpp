#include <pybind11/pybind11.h>
PYBIND11_MODULE(_foldsym, m) { m.doc() = "foldsym"; }
