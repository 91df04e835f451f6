"""Pre-registered outcomes for the claims harness.

Each claim is evaluated here with mpmath at high precision, independently of
the Rust code. The printed lhs/rhs pairs and the qualitative outcome
(agree / disagree / series diverges) are what the Rust harness must reproduce.
"""
import mpmath as mp

mp.mp.dps = 60


def G(x):
    return mp.exp(-mp.pi * x * x)


def M_pG(s):
    return mp.quad(lambda x: x ** (s - 1) * (1 - x) * G(x), [0, 1])


def zt(s):
    return s.imag * (2 * s.real - 1)


def show(claim, s, lhs, rhs):
    d = abs(lhs - rhs)
    print(f"{claim:22s} s={mp.nstr(s, 8):24s} lhs={mp.nstr(lhs, 14):40s} rhs={mp.nstr(rhs, 14):40s} |d|={mp.nstr(d, 5)}")


pts = [mp.mpc(0.25, 0), mp.mpc(0.25, 2), mp.mpc(0.1, 1), mp.mpc(0.4, 5)]
for s in pts:
    series = mp.nsum(lambda n: (-mp.pi) ** n * s * (s - 1) / (2 * mp.factorial(n) * (s + 2 * n) * (s + 2 * n + 1)), [0, mp.inf])
    show("refinement-series", s, 1 / mp.zeta(s), series)
for s in pts:
    show("p-general-fe", s, mp.zeta(s), 2 / (s * (s - 1) * M_pG(s)))
    show("p-general-fe x2norm", s, mp.zeta(s), 1 / (s * (s - 1) * M_pG(s)))

for s in [mp.mpc(0.25, 2), mp.mpc(0.1, 1), mp.mpc(0.4, 5), mp.mpc(0.3, 10)]:
    rhs = zt(s) / abs(s * (s - 1)) ** 2
    show("wr-averaged-fe", s, mp.im(0.5 * M_pG(s) * mp.zeta(s)), rhs)
    show("wr-averaged-fe x2norm", s, mp.im(M_pG(s) * mp.zeta(s)), rhs)

for s in [mp.mpc(0.5, 14.134725141734695), mp.mpc(0.5, 2), mp.mpc(0.25, 3), mp.mpc(1.5, 1)]:
    show("rwrfe literal M(p)", s, mp.re(mp.zeta(s) / (s * (s + 1))), mp.re(1 / (s * (s - 1))))
    show("rwrfe avg 1/2 M(pG)", s, mp.re(0.5 * M_pG(s) * mp.zeta(s)), mp.re(1 / (s * (s - 1))))
    R = s.real ** 2 - s.real - s.imag ** 2
    show("R(s) identity", s, abs(s * (s - 1)) ** 2 * mp.re(1 / (s * (s - 1))), R)

for s in [mp.mpc(2, 0), mp.mpc(0.7, 0), mp.mpc(0.5, 3), mp.mpc(3, 10), mp.mpc(0.3, 40)]:
    eta = mp.altzeta(s)
    show("eta-representation", s, mp.zeta(s), eta / (1 - 2 ** (1 - s)))

# imzeta-star double series, partial sums over n with exact inner j sums
mp.mp.dps = 200
for s in [mp.mpc(0.25, 2), mp.mpc(0.1, 1), mp.mpc(0.4, 5)]:
    lhs = mp.im(mp.pi ** (-s / 2) * mp.gamma(s / 2) * mp.zeta(s))
    pref = s.imag * (1 - 2 * s.real)
    total = 0
    partial = []
    for n in range(0, 13):
        a = -mp.pi * n * n
        inner = 0
        j = 0
        while True:
            term = (a ** j / mp.factorial(j)) * (4 * j + 1) / abs((2 * j + s) * (2 * j + 1 - s)) ** 2
            inner += term
            if j > 3 * abs(a) + 20 and abs(term) < mp.mpf(10) ** -100:
                break
            j += 1
        total += inner
        partial.append((n, pref * inner, pref * total))
    print(f"imzeta-star-series s={mp.nstr(s, 6)} lhs={mp.nstr(lhs, 14)}")
    for n, t, p in partial:
        print(f"   n={n:2d} term={mp.nstr(t, 10):20s} partial={mp.nstr(p, 14)}")
mp.mp.dps = 60

# Maslanka, as printed and with (-1)^j inside A_k
def maslanka(s, K, alt):
    tot = 0
    for k in range(K + 1):
        A = mp.fsum(mp.binomial(k, j) * (2 * j - 1) * mp.zeta(2 * j + 2) * ((-1) ** j if alt else 1) for j in range(k + 1))
        tot += A * mp.rf(1 - s / 2, k) / mp.factorial(k)
    return tot / (1 - s)

mp.mp.dps = 80
for s in [mp.mpc(2, 0), mp.mpc(0.5, 0), mp.mpc(0.5, 3), mp.mpc(3, 1)]:
    for alt in (False, True):
        vals = [maslanka(s, K, alt) for K in (10, 20, 40, 80)]
        print(f"maslanka alt={alt} s={mp.nstr(s, 6)} zeta={mp.nstr(mp.zeta(s), 12)} partials K=10,20,40,80: " + ", ".join(mp.nstr(v, 12) for v in vals))
    lit = lambda K: sum(mp.fsum((-1) ** j * mp.binomial(k, j) * (2 * j + 1) * mp.zeta(2 * j + 2) for j in range(k + 1)) * mp.rf(1 - s / 2, k) / mp.factorial(k) for k in range(K + 1)) / (s - 1)
    print(f"   literature form (s-1)^-1, (2j+1), (-1)^j: K=80 -> {mp.nstr(lit(80), 12)}")
