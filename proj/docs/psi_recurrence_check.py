"""Independent check of the psi coefficients by substitution into the transformed equation."""
from mpmath import mp, mpf, cbrt, fabs

mp.prec = 300
K = 20
N = 6


def mul(a, b):
    c = [mpf(0)] * K
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j in range(K - i):
            c[i + j] += x * b[j]
    return c


def inv(a):
    b = [mpf(0)] * K
    b[0] = 1 / a[0]
    for n in range(1, K):
        b[n] = -sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0]
    return b


def shift(s, k):
    return [mpf(0)] * k + s[:K - k]


c = cbrt(mpf(3) / 2)
# tau^3 - 2 c w^2 tau - 1 = 0 as a series in w
tau = [mpf(0)] * K
tau[0] = mpf(1)
for _ in range(20):
    t2 = mul(tau, tau)
    t3 = mul(t2, tau)
    F = [t3[i] - (2 * c * tau[i - 2] if i >= 2 else 0) - (1 if i == 0 else 0) for i in range(K)]
    dF = [3 * t2[i] - (2 * c if i == 2 else 0) for i in range(K)]
    d = mul(F, inv(dF))
    tau = [tau[i] - d[i] for i in range(K)]

X = [c * c * v for v in mul(tau, tau)]
Xp = [X[i] + (1 if i == 2 else 0) for i in range(K)]
Xm = [X[i] - (1 if i == 2 else 0) for i in range(K)]
p = shift(mul(Xp, inv(mul([2 * c * v for v in tau], mul(Xm, Xm)))), 3)
q = shift([4 * v for v in inv(mul(X, Xm))], 4)


def residual(a):
    A = a + [mpf(0)] * (K - len(a))
    D1 = [mpf(0)] * K
    D2 = [mpf(0)] * K
    for n in range(K):
        if n + 3 < K:
            D1[n + 3] = -mpf(n) / 3 * A[n]
        if n + 6 < K:
            D2[n + 6] = mpf(n) / 3 * (mpf(n) / 3 + 1) * A[n]
    t1, t0, t00 = shift(D1, 3), shift(A, 3), shift(A, 6)
    pm2 = [p[i] - (2 if i == 0 else 0) for i in range(K)]
    inner = [D1[i] - t0[i] / 6 for i in range(K)]
    r = [D2[i] - t1[i] / 3 + mpf(7) / 36 * t00[i] for i in range(K)]
    m1 = mul(pm2, inner)
    m2 = mul([q[i] - p[i] for i in range(K)], A)
    return [r[i] + m1[i] + m2[i] for i in range(K)]


a = [mpf(1)] + [mpf(0)] * N
for n in range(1, N + 1):
    a[n] = mpf(0)
    a[n] = -residual(a[:n + 1])[n + 3] / (mpf(2 * n) / 3)

print("residual check", mp.nstr(max(fabs(x) for x in residual(a)[:N + 3]), 3))
for i, x in enumerate(a):
    print("a_%d =" % i, mp.nstr(x, 36))
