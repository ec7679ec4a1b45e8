"""Reference values for the unit tests, computed with mpmath at 40 digits.

Run from the repository root:  python3 tests/oracle/gen_oracle.py > tests/unit/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-30, max_fixed=30), mp.nstr(z.imag, 20, min_fixed=-30, max_fixed=30))


def family(n, lam):
    rho = mp.mpf(n - 1) / 2
    return rho + lam, rho - lam, mp.mpf(n) / 2


def lambdas(n):
    rho = mp.mpf(n - 1) / 2
    return [("0.3rho", mp.mpf("0.3") * rho), ("0.9rho", mp.mpf("0.9") * rho), ("i", mp.mpc(0, 1))]


def lam_c(lam):
    return c(lam)


out = []
out.append("#pragma once")
out.append("// Generated by tests/oracle/gen_oracle.py; do not edit.")
out.append("#include <complex>")
out.append("namespace oracle {")
out.append("using cd = std::complex<double>;")

# gamma, digamma, reciprocal gamma
pts = [mp.mpc(0.5, 0), mp.mpc(3.7, 0), mp.mpc(-2.5, 0), mp.mpc(0.3, 1.2), mp.mpc(-3.2, 0.7), mp.mpc(12.0, -5.0),
       mp.mpc(1, 1), mp.mpc(0.05, 0)]
out.append("struct SpecialCase { cd z; cd gamma; cd digamma; };")
out.append("inline const SpecialCase special_cases[] = {")
for z in pts:
    out.append("  {%s, %s, %s}," % (c(z), c(mp.gamma(z)), c(mp.digamma(z))))
out.append("};")

# hyp2f1 off the cut
out.append("struct Hyp2f1Case { cd a, b, c, z, value; };")
out.append("inline const Hyp2f1Case hyp2f1_cases[] = {")
generic = [(mp.mpf("0.65"), mp.mpf("0.35"), mp.mpf(1)), (mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf("1.5")),
           (mp.mpf("1.9"), mp.mpf("0.1"), mp.mpf(2)), (mp.mpf("0.7"), mp.mpf("1.3"), mp.mpf("1.5")),
           (mp.mpc(0.5, 1), mp.mpc(0.5, -1), mp.mpf(1)), (mp.mpf("0.25"), mp.mpf("1.1"), mp.mpf("2.3"))]
zs = [mp.mpf("0.3"), mp.mpf("-0.5"), mp.mpf("0.95"), mp.mpf("-3"), mp.mpf("-40"), mp.mpc(0.5, 0.5), mp.mpc(2, 0.3),
      mp.mpc(2, -0.3), mp.mpc(0.9, 0.45), mp.mpc(-0.2, 0.9), mp.mpc(1.2, 1e-3), mp.mpc(7, -2), mp.mpc(0.999999, 0),
      mp.mpc(0.5, 0.86), mp.mpc(1.5, -0.8)]
for a, b, cc in generic:
    for z in zs:
        out.append("  {%s, %s, %s, %s, %s}," % (c(a), c(b), c(cc), c(z), c(mp.hyp2f1(a, b, cc, z))))
out.append("};")

# boundary values
out.append("struct BoundaryCase { int n; cd lambda; double x; cd plus; cd minus; };")
out.append("inline const BoundaryCase boundary_cases[] = {")
tiny = mp.mpf("1e-30")
for n in (2, 3, 4, 5):
    for _, lam in lambdas(n):
        a, b, cc = family(n, lam)
        for x in ("1.0001", "1.1", "1.5", "1.75", "1.9", "2.5", "5", "40"):
            xv = mp.mpf(x)
            p = mp.hyp2f1(a, b, cc, mp.mpc(xv, tiny))
            m = mp.hyp2f1(a, b, cc, mp.mpc(xv, -tiny))
            out.append("  {%d, %s, %s, %s, %s}," % (n, lam_c(lam), x, c(p), c(m)))
out.append("};")

# near-one coefficients
out.append("struct NearOneCase { int n; cd lambda; cd coefficient; };")
out.append("inline const NearOneCase near_one_cases[] = {")
for n in (2, 3, 4, 5):
    for _, lam in lambdas(n):
        a, b, cc = family(n, lam)
        if n == 2:
            co = 1 / (mp.gamma(a) * mp.gamma(b))
        else:
            co = mp.gamma(cc) * mp.gamma(cc - 1) / (mp.gamma(a) * mp.gamma(b))
        out.append("  {%d, %s, %s}," % (n, lam_c(lam), c(co)))
out.append("};")

# kernel examples
arg = (1 - mp.cosh(1)) / 2
out.append("inline constexpr double kernel_argument_a1 = %s;" % mp.nstr(arg, 20))
out.append("inline const cd psi_n3_i_a1 = %s;" % c(mp.hyp2f1(mp.mpc(1, 1), mp.mpc(1, -1), mp.mpf(1.5), arg)))
out.append("inline const cd psi_n2_03_half = %s;" % c(mp.hyp2f1(mp.mpf("0.8"), mp.mpf("0.2"), 1, mp.mpf("0.5"))))

# Green kernel on S^2 by direct zonal summation
lam = mp.mpf("0.3")
u = mp.mpf("0.3")
term = lambda k: (2 * k + 1) / (4 * mp.pi) * mp.legendre(k, u) / ((k + mp.mpf(0.5)) ** 2 - lam ** 2)
g = mp.nsum(term, [0, mp.inf], method="alternating")
out.append("inline constexpr double green_s2_lambda03_u03 = %s;" % mp.nstr(g, 20))

# spherical function integral, n = 2, s = 1: (1/2pi) int (cosh s + sinh s cos t)^(-lambda-rho) dt
s = mp.mpf(1)
val = mp.quad(lambda t: (mp.cosh(s) + mp.sinh(s) * mp.cos(t)) ** (-lam - mp.mpf(0.5)), [0, mp.pi]) / mp.pi
out.append("inline constexpr double spherical_n2_lambda03_s1 = %s;" % mp.nstr(val, 20))
out.append("inline constexpr double phi_closed_n2_lambda03_s1 = %s;" %
           mp.nstr(mp.hyp2f1(mp.mpf("0.8"), mp.mpf("0.2"), 1, (1 - mp.cosh(s)) / 2), 20))

out.append("}  // namespace oracle")
print("\n".join(out))
