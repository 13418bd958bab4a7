"""
Oracles written as plain Python double loops over floats. They repeat the
library's operation order (real and imaginary parts kept apart, ascending
index of the left factor), so their results compare bit for bit.
"""
import pytest

from bohrmajorant import presets


def brute_mul(a, b, degree):
    a = [complex(x) for x in a]
    b = [complex(x) for x in b]
    out = []
    for n in range(degree + 1):
        re = 0.0
        im = 0.0
        for j in range(min(n, len(a) - 1) + 1):
            if n - j > len(b) - 1:
                continue
            x, y = a[j], b[n - j]
            re += x.real * y.real - x.imag * y.imag
            im += x.real * y.imag + x.imag * y.real
        out.append(complex(re, im))
    return out


def brute_compose(h, phi, degree):
    h = [complex(x) for x in h]
    acc = [0j] * (degree + 1)
    p = [1 + 0j] + [0j] * degree
    for n in range(min(len(h) - 1, degree) + 1):
        if n > 0:
            p = brute_mul(p, phi, degree)
        b = h[n]
        for i in range(degree + 1):
            x = p[i]
            acc[i] = complex(acc[i].real + (b.real * x.real - b.imag * x.imag),
                             acc[i].imag + (b.real * x.imag + b.imag * x.real))
    return acc


def moebius_majorant(a, r):
    """M_r of (a - z) / (1 - a z) in closed form."""
    return a + (1 - a * a) * r / (1 - a * r)


def moebius_section_sup(a, r):
    """sup over |z| = r of the first section a - (1 - a^2) z."""
    return a + (1 - a * a) * r


@pytest.fixture
def config_override():
    """Deep-merge overrides into the presets for one test, restoring them afterwards."""
    import copy
    saved = copy.deepcopy(presets.default)

    def override(d):
        presets.update_config(d)

    yield override
    presets.default.clear()
    presets.default.update(saved)
