"""Independent reference values computed with mpmath.

These numbers are frozen into the Rust test suites. Nothing here imports
or calls the Rust implementation.
"""
import mpmath as mp

mp.mp.dps = 40


def G(x):
    return mp.exp(-mp.pi * x * x)


def theta_G(x):
    return mp.nsum(lambda n: G(n * x), [1, mp.inf])


def mellin_G(s):
    return mp.quad(lambda x: x ** (s - 1) * G(x), [0, 1, mp.inf])


def line(name, value):
    print(f"{name} = {mp.nstr(value, 20)}")


print("# numerics_core / reference_fns")
line("eta(1/2)", mp.altzeta(0.5))
line("gamma(1/4)", mp.gamma(0.25))
line("zeta(3)", mp.zeta(3))
line("zeta(0.5)", mp.zeta(0.5))
line("zeta(0.25)", mp.zeta(0.25))
line("zeta(0.25+5i)", mp.zeta(mp.mpc(0.25, 5)))
line("first zeros", [mp.zetazero(k).imag for k in range(1, 11)])

print("# transforms")
line("theta(G)(1)", theta_G(1))
line("theta(G)(2)", theta_G(2))
s = mp.mpc(1.2, 0.7)
line("M(G)(1.2+0.7i) quadrature", mellin_G(s))
line("  candidate 1/2 pi^(-s/2) Gamma(s/2)", 0.5 * mp.pi ** (-s / 2) * mp.gamma(s / 2))
line("  candidate pi^((1-s)/2) Gamma((s+1)/2)", mp.pi ** ((1 - s) / 2) * mp.gamma((s + 1) / 2))
xs = mp.findroot(lambda x: mp.diff(lambda y: y*y*(1-y)*G(y), x), 0.5, tol=1e-30)
line("s2 norm PTG argmax", xs)
line("s2 norm PTG", xs*xs*(1-xs)*G(xs))

print("# levy")
line("E L^(1/4), y0=1", 2 ** -0.25 * mp.gamma(0.25) / mp.sqrt(mp.pi))
line("levy cdf(1,1)", mp.erfc(1 / mp.sqrt(2)))
line("levy density d1(1)", mp.exp(-0.5) / mp.sqrt(2 * mp.pi))

print("# continuation")
s = mp.mpc(0.75, 2)
direct = mp.im(mellin_G(s) * mp.zeta(s))
zt = s.imag * (2 * s.real - 1)
den = abs(s * (s - 1)) ** 2
osc_derived = mp.quad(lambda x: (x ** (s.real - 1) - x ** (-s.real)) * theta_G(x) * mp.sin(s.imag * mp.log(x)), [1, 2, 4, 8])
osc_paper = mp.quad(lambda x: (x ** (s.real - 1) - x ** (-s.real)) * theta_G(x) * mp.sin(s.imag * x), [1, 2, 3, 4, 6, 8])
line("im-decomp direct (G,0.75+2i)", direct)
line("  trivial derived", -zt / den)
line("  osc derived", osc_derived)
line("  derived sum", -zt / den + osc_derived)
line("  paper sum", zt / den + osc_paper)
line("tail_integral(G,2)", mp.quad(lambda x: (x ** -2 + x) * theta_G(x), [1, 2, 4, 8]))
line("M(G)(2)zeta(2)-1/2", mellin_G(2) * mp.zeta(2) - 0.5)
