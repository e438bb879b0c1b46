#!/usr/bin/env python3
# Copyright 2026 The srpass Authors
# SPDX-License-Identifier: Apache-2.0
"""Reference values for the Bessel-convolution kernels.

Inverts the Laplace-domain definition

    F_{mu,nu}(y, z) = L^{-1}_{p->z} { exp(y/p - y/(p+2i)) / (p^mu (p+2i)^nu) }

numerically on a Talbot contour p(t) = r t (cot t + i) at 50 significant
digits, and cross-checks each value against a second contour radius.  The
output is a C++ header consumed by tests/kernels_test.cpp.

Usage: talbot_kernels.py > tests/data/kernel_reference.hpp
"""
import mpmath as mp

mp.mp.dps = 50
CUT = mp.mpf("0.02")


def talbot(fp, t, r):
    t = mp.mpf(t)

    def integrand(th):
        if th == 0:
            p = mp.mpf(r)
            dp = mp.mpc(0, r)
        else:
            c = mp.cot(th)
            p = r * th * (c + 1j)
            dp = r * (c - th / mp.sin(th) ** 2 + 1j)
        return mp.exp(p * t) * fp(p) * dp

    nodes = [-mp.pi + CUT, -2, -1, 0, 1, 2, mp.pi - CUT]
    return mp.quad(integrand, nodes) / (2j * mp.pi)


def kernel(mu, nu, y, z, r):
    y = mp.mpf(y)
    return talbot(lambda p: mp.exp(y / p - y / (p + 2j)) / (p ** mu * (p + 2j) ** nu), z, r)


def main():
    kernels = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 2)]
    points = [(y, z) for y in ("0.5", "1", "2", "5") for z in ("0.5", "1", "2", "5")]
    points.append(("2", "3"))
    print("// Copyright 2026 The srpass Authors")
    print("// SPDX-License-Identifier: Apache-2.0\n")
    print("// Generated by tests/oracles/talbot_kernels.py -- do not edit.")
    print("#pragma once\n")
    print("namespace srpass::testdata {\n")
    print("struct KernelReference {\n  int mu;\n  int nu;\n  double y;\n  double z;\n  double re;\n  double im;\n};\n")
    print("inline constexpr KernelReference kKernelReference[] = {")
    for mu, nu in kernels:
        for y, z in points:
            a = kernel(mu, nu, y, z, 3 + 10 / mp.mpf(z))
            b = kernel(mu, nu, y, z, 6 + 10 / mp.mpf(z))
            assert abs(a - b) <= mp.mpf("1e-25") * abs(a), (mu, nu, y, z)
            print(f"    {{{mu}, {nu}, {y}, {z}, {mp.nstr(a.real, 17)}, {mp.nstr(a.imag, 17)}}},")
    print("};\n")
    print("}  // namespace srpass::testdata")


if __name__ == "__main__":
    main()
