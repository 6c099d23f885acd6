"""Smoke tests for the python bindings."""

import json
import math

import croftint


def require(cond, msg):
    if not cond:
        raise SystemExit(f"FAIL: {msg}")


def main():
    # exact Selberg family
    re, im = croftint.f_closed([2, 4])  # e = (1, 2)
    require(re == "-4/3" and im == "0", f"f_closed (1,2): {re}+{im}i")
    re, im = croftint.f_oracle([2, 4])
    require(re == "-4/3", f"f_oracle (1,2): {re}")
    re, im = croftint.f_recursive([1, 3])  # e = (1/2, 3/2)
    require(re == "0" and im == "8/3", f"half-integer f: {re}+{im}i")

    si = croftint.selberg_I(2, "abs")
    require(si["re"] == "4/((s+1)(2s+3))", f"selberg_I display: {si['re']}")
    val_re, _ = croftint.selberg_I_eval(2, "abs", "0")
    require(val_re == "4/3", f"I_2(0): {val_re}")

    lhs, rhs = croftint.residue_identity_check(["1", "2", "3", "4"], 2)
    require(lhs == rhs == "10", f"residue identity: {lhs} vs {rhs}")

    # u family
    require(abs(croftint.u_eval("0", "0", "0") - 1.0) < 1e-9, "u(0,0,0)")
    require(abs(croftint.u_eval("-2", "0", "0") + 1.0) < 1e-9, "u(-2,0,0)")
    require(croftint.u_residue(5, "3/2", "1/2") == "-1/8", "u residue")

    # matrix integrals
    d_re, d_im = croftint.D_eval(1, "abs", 0.0)
    require(abs(d_re - 2.0) < 1e-10, f"D_1^abs(0) = {d_re}")
    mc = croftint.D_mc(2, "abs", 0.0, 50000, 12345, workers=2)
    require(abs(mc["mean"] - math.pi * 4 / 3) < 5 * mc["stderr"], "D_2^abs(0) MC")

    require(croftint.gamma_pole_order(3, [], "-2") == 2, "Gamma_3 pole order")
    num, den, net = croftint.constantine_pole_orders(3, "-1/2", [], "-4")
    require((num, den, net) == (2, 1, 1), f"constantine orders {num},{den},{net}")

    # Grassmannian sampling
    spec = croftint.haar_spectrum(2, 2, 2, 7)
    require(len(spec) == 2 and spec[0] >= spec[1], "haar spectrum shape")
    require(spec == croftint.haar_spectrum(2, 2, 2, 7), "sampling determinism")
    dens = croftint.angle_density(1, 1, 1, [0.0])
    require(abs(dens - 1.0 / math.pi) < 1e-9, "arcsine density at 0")
    comp = croftint.complement_spectrum(2, 2, 2, 7)
    require(abs(comp[0] + spec[1]) < 1e-9, "complement relation")

    vol = croftint.ellipsoid_projection_volume(2, 2, 2, 9, 1.0, 1.0)
    require(abs(vol - math.pi) < 1e-9, "unit-ball shadow")
    mc_vol, mc_err = croftint.projection_mc(2, 2, 2, 9, 1.0, 1.0, 200000)
    require(abs(mc_vol - math.pi) < 5 * mc_err, "shadow MC")

    # crofton reports
    pairing = json.loads(croftint.universal_pairing("abs_2m", 1))
    require(pairing["exact_value"] == "-2" and pairing["certified"], "abs_2m pairing")
    muc = json.loads(croftint.mu_c_vanishing(2))
    require(muc["certified"], "mu_c certificate")
    q2 = json.loads(croftint.q2_basis_certificate(4, 2))
    require(q2["certified"], "q2 certificate")

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
