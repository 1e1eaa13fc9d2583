"""Plain-text and LaTeX rendering of coefficients, operators and spinors."""

from __future__ import annotations

from fractions import Fraction

from .coeff import PARAMS, Coeff

_LATEX_PARAM = {"k": "k", "omega": "\\omega", "nu": "\\nu", "alpha": "\\alpha"}


def _frac_str(f: Fraction, latex=False) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    if latex:
        sign = "-" if f < 0 else ""
        return "%s\\frac{%d}{%d}" % (sign, abs(f.numerator), f.denominator)
    return "%d/%d" % (f.numerator, f.denominator)


def _qp_str(pair, latex=False) -> str:
    a, b = pair
    root = "\\sqrt{2}" if latex else "sqrt2"
    if not b:
        return _frac_str(a, latex)
    if b == 1:
        bs = root
    elif b == -1:
        bs = "-" + root
    else:
        bs = _frac_str(b, latex) + ("" if latex else "*") + root
    if not a:
        return bs
    joiner = bs if bs.startswith("-") else "+" + bs
    return _frac_str(a, latex) + joiner


def _param_monomial(exps, latex=False) -> str:
    parts = []
    for name, e in zip(PARAMS, exps):
        if not e:
            continue
        sym = _LATEX_PARAM[name] if latex else name
        if e == 1:
            parts.append(sym)
        elif latex:
            parts.append("%s^{%d}" % (sym, e))
        else:
            parts.append("%s^%d" % (sym, e))
    sep = " " if latex else "*"
    return sep.join(parts)


def coeff_str(c: Coeff, latex=False) -> str:
    if c.is_zero():
        return "0"
    pieces = []
    for exps, pair in c.sorted_terms():
        mono = _param_monomial(exps, latex)
        scal = _qp_str(pair, latex)
        if not mono:
            pieces.append(scal)
        elif scal == "1":
            pieces.append(mono)
        elif scal == "-1":
            pieces.append("-" + mono)
        else:
            if ("+" in scal[1:]) or ("-" in scal[1:]):
                scal = "(%s)" % scal
            pieces.append(scal + (" " if latex else "*") + mono)
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _vars_default(nvars, latex=False):
    if latex:
        return ["x_{%d}" % (i + 1) for i in range(nvars)]
    return ["x%d" % (i + 1) for i in range(nvars)]


def _term_str(xpow, dpow, var_names, latex=False) -> str:
    parts = []
    for v, e in zip(var_names, xpow):
        if not e:
            continue
        if e == 1:
            parts.append(v)
        elif latex:
            parts.append("%s^{%d}" % (v, e))
        else:
            parts.append("%s^%d" % (v, e))
    for v, e in zip(var_names, dpow):
        dsym = "\\partial_{%s}" % v if latex else "d_" + v
        if not e:
            continue
        if e == 1:
            parts.append(dsym)
        elif latex:
            parts.append("%s^{%d}" % (dsym, e))
        else:
            parts.append("%s^%d" % (dsym, e))
    sep = " " if latex else "*"
    return sep.join(parts)


def scalar_op_str(op, var_names=None, latex=False) -> str:
    if not op.terms:
        return "0"
    var_names = var_names or _vars_default(op.nvars, latex)
    pieces = []
    for mono, c in op.sorted_terms():
        body = _term_str(mono.xpow, mono.dpow, var_names, latex)
        cs = coeff_str(c, latex)
        if not body:
            piece = cs if not _needs_parens(cs) else "(%s)" % cs
        elif cs == "1":
            piece = body
        elif cs == "-1":
            piece = "-" + body
        else:
            if _needs_parens(cs):
                cs = "(%s)" % cs
            piece = cs + (" " if latex else "*") + body
        pieces.append(piece)
    out = pieces[0]
    for p in pieces[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def _needs_parens(s: str) -> bool:
    return ("+" in s[1:]) or ("-" in s[1:])


def matrix_op_str(op, var_names=None) -> str:
    rows = []
    for row in op.entries:
        rows.append("[" + ", ".join(scalar_op_str(e, var_names) for e in row) + "]")
    return "[" + ",\n ".join(rows) + "]"


def matrix_op_latex(op, var_names=None) -> str:
    var_names = var_names or _vars_default(op.nvars, latex=True)
    lines = []
    for row in op.entries:
        lines.append(" & ".join(scalar_op_str(e, var_names, latex=True) for e in row))
    body = " \\\\\n".join(lines)
    return "\\begin{pmatrix}\n%s\n\\end{pmatrix}" % body


def poly_str(p, var_names=None, latex=False) -> str:
    if not p.terms:
        return "0"
    var_names = var_names or _vars_default(p.nvars, latex)
    zero_d = (0,) * p.nvars
    pieces = []
    for mono in sorted(p.terms):
        c = p.terms[mono]
        body = _term_str(mono, zero_d, var_names, latex)
        cs = coeff_str(c, latex)
        if not body:
            piece = cs
        elif cs == "1":
            piece = body
        elif cs == "-1":
            piece = "-" + body
        else:
            if _needs_parens(cs):
                cs = "(%s)" % cs
            piece = cs + (" " if latex else "*") + body
        pieces.append(piece)
    out = pieces[0]
    for p_ in pieces[1:]:
        out += p_ if p_.startswith("-") else "+" + p_
    return out


def spinor_str(v, var_names=None) -> str:
    return "(" + ", ".join(poly_str(c, var_names) for c in v.components) + ")^T"


def spinor_latex(v, var_names=None) -> str:
    var_names = var_names or _vars_default(v.nvars, latex=True)
    body = " \\\\ ".join(poly_str(c, var_names, latex=True) for c in v.components)
    return "\\begin{pmatrix} %s \\end{pmatrix}" % body
