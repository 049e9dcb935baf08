#!/usr/bin/env python3
"""Expands the transcribed rational parametrizations, endpoint expressions,
closed values and polynomial relations into term lists (data/*.json).

Run from the repository root: python3 tools/gen_catalogs.py
"""
import json
import pathlib

import sympy as sp

z, T, u, v, x, t, w = sp.symbols("z T u v x t w")
SYMBOLS = {"z": z, "T": T, "u": u, "v": v, "x": x, "t": t, "w": w}
NAMES = {s: n for n, s in SYMBOLS.items()}


def terms(expr):
    expr = sp.expand(expr)
    if expr == 0:
        return []
    gens = sorted(expr.free_symbols, key=lambda s: NAMES[s])
    if not gens:
        return [{"c": str(sp.Rational(expr))}]
    poly = sp.Poly(expr, *gens)
    out = []
    for monom, coeff in sorted(poly.terms()):
        term = {"c": str(sp.Rational(coeff))}
        for g, e in zip(gens, monom):
            if e:
                term[NAMES[g]] = int(e)
        out.append(term)
    return out


def rational(text, local):
    expr = sp.sympify(text, locals=local)
    if expr.has(z):
        expr = expr.subs(T, z**2)
    num, den = sp.fraction(sp.together(expr))
    return {"expression": text, "numerator": terms(num), "denominator": terms(den)}


# ---------------------------------------------------------------- catalogued parametrizations

N1_sq = """-(z**2+1)**2*(z+1)**3*(z-1)**4*u**8
 - 2*z*(z**2+1)*(z**4-10*z**3-14*z-1)*(z+1)**2*(z-1)**3*u**7
 + 4*z**2*(z+1)*(10*z**7-35*z**6+14*z**5-115*z**4-10*z**3-57*z**2-14*z+15)*(z-1)**2*u**6
 + 2*z**3*(z-1)*(z**10+14*z**9-77*z**8+252*z**7-66*z**6+1224*z**5+106*z**4+68*z**3+33*z**2-534*z+3)*u**5
 + 2*z**4*(z-1)*(z**10+8*z**9-115*z**8-400*z**7-1154*z**6-1728*z**5-5890*z**4-1520*z**3-2607*z**2-456*z+549)*u**4
 + 2*z**5*(z**11-11*z**10-207*z**9+149*z**8+2946*z**7+2202*z**6+8506*z**5+9266*z**4-5571*z**3+4017*z**2-3627*z-1287)*u**3
 - 4*z**6*(14*z**10-z**9-465*z**8-684*z**7+3704*z**6+2034*z**5+11274*z**4+6756*z**3-702*z**2+3159*z-513)*u**2
 - 2*z**7*(z**11+13*z**10-115*z**9-95*z**8+1346*z**7+3722*z**6-8334*z**5-4470*z**4-24291*z**3-12663*z**2-351*z-3915)*u
 - z**8*(z**11-z**10-37*z**9+293*z**8+382*z**7-894*z**6-4614*z**5+7686*z**4+5409*z**3+17631*z**2+9099*z-2187)"""
N2_sq = """T**5 + (-2*u**2+32*u-73)*T**4 + (u**4-16*u**3+90*u**2-96*u-177)*T**3
 + (-u**4+82*u**2-192*u-135)*T**2 - u**2*(u**2-16*u+42)*T + u**4"""
D2_sq = "-T**4 + 2*(u-2)*(u-6)*T**3 - (u-3)*(u**3+3*u**2-15*u+3)*T**2 + 6*T*u**2 + u**4"
N_diag = """-(z**2+3)*(z-1)**2*v**3 + (z-1)*(3*z**3+9*z**2+z+11)*v**2
 + (z+1)*(3*z**3-9*z**2+z-11)*v - (z**2+3)*(z+1)**2"""
D_asym = "z**8 - 2*(u-2)*(u-6)*z**6 + (u-3)*(u**3+3*u**2-15*u+3)*z**4 - 6*u**2*z**2 - u**4"
N1_asym = "z**4 + 2*(u-3)*z**3 + (u+1)*(u-3)*z**2 - u**2"
N2_asym = "(z+1)*(z-1)**2*u**2 - 4*z*(3*z+1)*(z-1)*u - z**2*(z**3+3*z**2-25*z-11)"
N1_dasym = """-(z**2+3)*(z-1)**2*v**3 + 4*(z+2)*(z-1)*v**2 + 4*(z+1)*(z-2)*v - (z**2+3)*(z+1)**2"""
N2_dasym = """(z**2+3)*(z-1)**2*v**3 + (3*z**2+12*z+5)*(z-1)**2*v**2
 + (3*z**2-12*z+5)*(z+1)**2*v + (z**2+3)*(z+1)**2"""
DV = "(T**2*v**2-2*T**2*v+2*T*v**2+T**2-3*v**2+2*T-6*v-3)"


def sub(text, **parts):
    for k, val in parts.items():
        text = text.replace(k, "(" + val + ")")
    return text


local = {"z": z, "T": T, "u": u, "v": v}
PARAMS = [
    ("SQ_MXT0", "square walks from (0,0): t M(xt, 0)", "square", [0, 0], "xt",
     sub("N1/(3*T*(z-1)*(T+3)**3*(u+z)**2*(u**2-9*T+8*T*u+T**2-T*u**2)**2)", N1=N1_sq)),
    ("SQ_M0XT", "square walks from (0,0): t M(0, xt)", "square", [0, 0], "xt",
     sub("(T*u-2*T+u)**2*N2/(T*(T+3)**3*D2)", N2=N2_sq, D2=D2_sq)),
    ("DIAG_MX0", "diagonal walks from (0,0): t^2 x^(-1/2) M(sqrt x, 0)", "diagonal", [0, 0], "sqrt",
     sub("v*(v*T-T-v-3)*NN/(48*z**3*(v+1)**2*(v*z-v-z-1)**2)", NN=N_diag)),
    ("DIAG_M0X", "diagonal walks from (0,0): t sqrt(x) M(0, sqrt x)", "diagonal", [0, 0], "sqrt",
     "(T*v-T+3*v+1)*(-T*v**2-2*T*v+v**2+T+2*v+3)/(2*(v+1)*" + DV + ")"),
    ("SQ_ASYM_LXT0", "square walks from (-1,0): L(xt, 0)", "square", [-1, 0], "xt",
     "256*z**4*(u*z**2-2*z**2+u)/((u*z+z**2+u-3*z)*(u+z)*(z-1)*(z**2+3)**3)"),
    ("SQ_ASYM_L0XT", "square walks from (-1,0): x L(0, xt)", "square", [-1, 0], "xt",
     sub("256*z**6*(u-z)*(u*z-z**2-u-3*z)*(u**2*z**2-z**4-4*u*z**2+u**2+3*z**2)/(DD*(z-1)*(z**2+3)**3)",
         DD=D_asym)),
    ("SQ_ASYM_BXT0", "square walks from (-1,0): x B(xt, 0)", "square", [-1, 0], "xt",
     sub("512*z**6*(u*z**2-2*z**2+u)*(u-z)*NA/((1-z**2)*(z**2+3)**3*DD)", NA=N1_asym, DD=D_asym)),
    ("SQ_ASYM_B0XT", "square walks from (-1,0): B(0, xt)", "square", [-1, 0], "xt",
     sub("16*z**2*(u*z**2-2*z**2+u)*NB/((u+z)*(1-z**2)*(z**2+3)**3*(u*z-z**2-u-3*z))", NB=N2_asym)),
    ("DIAG_ASYM_LX0", "diagonal walks from (-2,0): x^(-1/2) L(sqrt x, 0)", "diagonal", [-2, 0], "sqrt",
     sub("32*v*z**3*(v*T-T-v-3)*NA/(3*(1+v)**2*(T-1)*(T+3)**3*(v*z-v-z-1)**2)", NA=N1_dasym)),
    ("DIAG_ASYM_L0X", "diagonal walks from (-2,0): t sqrt(x) L(0, sqrt x)", "diagonal", [-2, 0], "sqrt",
     "(T*v-T+3*v+1)*(v-1)*(T*v-T-v-3)/(2*(v+1)*" + DV + ")"),
    ("DIAG_ASYM_BX0", "diagonal walks from (-2,0): t sqrt(x) B(sqrt x, 0)", "diagonal", [-2, 0], "sqrt",
     "v*(T*v-T+3*v+1)*(2-T*v+v)/((v+1)*" + DV + ")"),
    ("DIAG_ASYM_B0X", "diagonal walks from (-2,0): x^(-1/2) B(0, sqrt x)", "diagonal", [-2, 0], "sqrt",
     sub("16*v*z**3*(v*T-T-v-3)*NB/(3*(v+1)**2*(T-1)*(T+3)**3*(v*z-v-z-1)**2)", NB=N2_dasym)),
]

# (id, lattice, start, endpoint, power of t on the left, coefficient of the quadrant series, expression)
ENDPOINTS = [
    ("SQ_CM10", "square", [0, 0], [-1, 0], 1, "0", "(z**2-1)*(11+6*z**2-z**4)/(z**2+3)**3"),
    ("SQ_CM11", "square", [0, 0], [-1, 1], 0, "0",
     "1024*z**3*(z**2+1)**2*(z-1)*(1+2*z-z**2)/((z**2+3)**6*(z+1))"),
    ("SQ_CM20", "square", [0, 0], [-2, 0], 0, "-1/3",
     "256*z**3*(4+4*z-4*z**2+23*z**3-9*z**4+18*z**5-6*z**6+3*z**7-z**8)/(3*(z**2+3)**6*(z+1))"),
    ("SQ_C00", "square", [0, 0], [0, 0], 0, "1/3",
     "512*z**3*(4+4*z-4*z**2+23*z**3-9*z**4+18*z**5-6*z**6+3*z**7-z**8)/(3*(z**2+3)**6*(z+1))"),
    ("DIAG_CM11", "diagonal", [0, 0], [-1, 1], 1, "0", "(T-1)*(11+6*T-T**2)/(T+3)**3"),
    ("DIAG_CM20", "diagonal", [0, 0], [-2, 0], 0, "-1/3", "32*z**3*(1+z+3*z**2-z**3)/(3*(z+1)*(z**2+3)**3)"),
    ("DIAG_C00", "diagonal", [0, 0], [0, 0], 0, "1/3", "64*z**3*(1+z+3*z**2-z**3)/(3*(z+1)*(z**2+3)**3)"),
    ("SQ_ASYM_C00", "square", [-1, 0], [0, 0], 1, "0", "-(T-1)*(T**2-6*T-11)/(T+3)**3"),
    ("SQ_ASYM_CM20", "square", [-1, 0], [-2, 0], 1, "0", "16*(T-1)/(T+3)**3"),
    ("SQ_ASYM_C0M2", "square", [-1, 0], [0, -2], 1, "0", "(T-1)**2*(5-T)/(T+3)**3"),
    ("SQ_ASYM_CM10", "square", [-1, 0], [-1, 0], 0, "0", "64*z**3/(z**2+3)**3"),
    ("SQ_ASYM_CM11", "square", [-1, 0], [-1, 1], 1, "0", "-16*z**2*(z-1)*(z-3)/(z**2+3)**3"),
    ("SQ_ASYM_C0M1", "square", [-1, 0], [0, -1], 0, "0",
     "-32*z**3*(z-1)*(z**2-2*z-1)/((z+1)*(z**2+3)**3)"),
    ("DIAG_ASYM_CM11", "diagonal", [-2, 0], [-1, 1], 1, "0", "16*(T-1)/(T+3)**3"),
    ("DIAG_ASYM_CM13", "diagonal", [-2, 0], [-1, 3], 1, "0", "64*(T-1)**2*(T+1)*(7-T)/(T+3)**6"),
    ("DIAG_ASYM_CM20", "diagonal", [-2, 0], [-2, 0], 0, "1/3", "32*z**3*(5+5*z-3*z**2+z**3)/(3*(z+1)*(z**2+3)**3)"),
    ("DIAG_ASYM_C00", "diagonal", [-2, 0], [0, 0], 0, "-1/3", "32*z**3*(1+z+3*z**2-z**3)/(3*(z+1)*(z**2+3)**3)"),
    ("DIAG_ASYM_C0M2", "diagonal", [-2, 0], [0, -2], 0, "1/3", "-64*z**3*(2+2*z-3*z**2+z**3)/(3*(z+1)*(z**2+3)**3)"),
    ("DIAG_ASYM_C1M1", "diagonal", [-2, 0], [1, -1], 1, "0", "(T-1)**2*(5-T)/(T+3)**3"),
]

VALUES = [
    ("S1", "S_1 = [x^1] S(x), square and diagonal walks from (0,0)", "(T-1)*(11+6*T-T**2)/(T+3)**3"),
    ("P0_SQ", "P_0 = [x^0] Delta(x) S(x) S(1/x), square walks from (0,0)",
     "(T-1)**2*(41+331*T+106*T**2+38*T**3-3*T**4-T**5)/(128*T**3*(T+3)**3)"),
    ("F0_DIAG", "F_0 = P_0 - S(-1), diagonal walks from (0,0)", "(1-T)*(3*T**3-29*T**2-15*T+9)/(128*T**3)"),
    ("R0_DIAG", "R_0 = [x^0] R(x), diagonal walks from (0,0)", "(z-1)*(-z**3+3*z**2+z+1)/(24*z**3)"),
    ("TM01_SQ", "t^2 M_{0,1}, square walks from (0,0)", "4*(z-1)**2*(z**2+1)**2*(1+2*z-z**2)/(z**3*(3+z**2)**3)"),
    ("S1_N_DIAG", "S_1 for the N series, diagonal walks from (-2,0)", "(T-1)*(21-6*T+T**2)/(T+3)**3"),
    ("F0_N_DIAG", "F_0 for the N series, diagonal walks from (-2,0)",
     "(T-1)*(5*T**3-11*T**2+135*T-33)/(128*T**3)"),
]

RELATIONS = [
    ("S1_QUARTIC", "quartic for S_1 (square and diagonal)",
     "19683*t**6*w**4 + 2187*t**4*(20*t**2-1)*w**3 + 81*t**2*(11*t**2-1)*(38*t**2-1)*w**2"
     " + (92*t**2-1)*(11*t**2-1)**2*w + t**2*(1331*t**4-107*t**2+1)"),
    ("P0_QUARTIC", "quartic for P_0 (square)",
     "387420489*t**6*w**4 + 3188646*t**4*(284*t**4-113*t**2-1)*w**3"
     " + 8748*t**2*(31570*t**8-96755*t**6+7251*t**4+t**2+1)*w**2"
     " + (29962144*t**12-441273288*t**10+87261432*t**8-4754122*t**6+64860*t**4-687*t**2-8)*w"
     " + t**4*(1102736*t**10-53770928*t**8+4286896*t**6-58740*t**4+751*t**2+8)"),
    ("F0_QUARTIC", "quartic for F_0 (diagonal)",
     "27*w**4 + 27*(8*t**2-1)*w**3 + 9*(2*t+1)*(2*t-1)*(10*t**2-1)*w**2"
     " + (224*t**6-68*t**4+16*t**2-1)*w + t**2*(48*t**6+88*t**4-20*t**2+1)"),
]

# Implicit definitions: polynomial in the unknown w, t, x and previously defined series.
IMPLICIT = [
    ("T", "T = 1 + 256 t^2 T^3 / (T+3)^3, constant term 1", "1", "(w-1)*(w+3)**3 - 256*t**2*w**3"),
    ("U", "16 T^2 (U^2 - T) = x (U + U T - 2T)(U^2 - 9T + 8TU + T^2 - TU^2), constant term 1", "1",
     "16*T**2*(w**2-T) - x*(w+w*T-2*T)*(w**2-9*T+8*T*w+T**2-T*w**2)"),
    ("V", "1 - T + 3V + VT = x V^2 (3 + V + T - VT), constant term 0", "0",
     "1-T+3*w+w*T - x*w**2*(3+w+T-w*T)"),
]


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "data"
    params = []
    for pid, anchor, lattice, start, change, text in PARAMS:
        entry = {"id": pid, "anchor": anchor, "lattice": lattice, "start": start, "change": change}
        entry.update(rational(text, local))
        params.append(entry)
    endpoints = []
    for eid, lattice, start, endpoint, tpow, qcoef, text in ENDPOINTS:
        entry = {"id": eid, "anchor": f"{lattice} walks from ({start[0]},{start[1]}) to ({endpoint[0]},{endpoint[1]})",
                 "lattice": lattice, "start": start, "endpoint": endpoint, "t_power": tpow,
                 "quadrant_coefficient": qcoef}
        entry.update(rational(text, local))
        endpoints.append(entry)
    values = []
    for vid, anchor, text in VALUES:
        entry = {"id": vid, "anchor": anchor}
        entry.update(rational(text, local))
        values.append(entry)
    (root / "params.json").write_text(
        json.dumps({"params": params, "endpoints": endpoints, "values": values}, indent=1) + "\n")

    rlocal = {"t": t, "w": w, "x": x, "T": T}
    relations = [{"id": rid, "anchor": anchor, "expression": text,
                  "terms": terms(sp.sympify(text, locals=rlocal))} for rid, anchor, text in RELATIONS]
    implicit = [{"id": iid, "anchor": anchor, "initial": init, "expression": text,
                 "terms": terms(sp.sympify(text, locals=rlocal))} for iid, anchor, init, text in IMPLICIT]
    (root / "relations.json").write_text(
        json.dumps({"relations": relations, "implicit": implicit}, indent=1) + "\n")


if __name__ == "__main__":
    main()
