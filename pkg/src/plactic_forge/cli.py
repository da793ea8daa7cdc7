"""plactic-forge command line."""
import argparse
import csv
import io
import json
import sys

from . import counting as C
from . import divdiff as Dd
from . import families as F
from . import kernels as K
from . import lattice as L
from . import perm as P
from . import plactic as W
from . import quotients as Q
from . import verify as V
from .poly import Poly, parse, to_json_obj, to_text


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError("%s: %s" % (self.prog, message))


FAMILIES = ("schubert", "grothendieck", "dual_grothendieck", "key", "reduced_key", "key_grothendieck",
            "reduced_key_grothendieck", "dz", "kn", "generalized", "bott_samelson")
KEY_VARIANTS = {"key": "key", "reduced_key": "reduced", "key_grothendieck": "kg",
                "reduced_key_grothendieck": "reduced_kg"}
KERNEL_ALGEBRAS = ("PC", "QPC", "IP", "PF", "NP", "NC", "IC", "P", "FREE")


def _param(s):
    return parse(s) if isinstance(s, str) else Poly.coerce(s)


def _composition(s):
    s = s.strip()
    if "," in s:
        return tuple(int(c) for c in s.split(",") if c.strip())
    return tuple(int(c) for c in s)


def _partition(s):
    return _composition(s) if s else ()


def _poly_out(p, emit):
    if emit == "json":
        return json.dumps(to_json_obj(p))
    return to_text(p)


# poly ---------------------------------------------------------------------

def cmd_poly(args):
    fam = args.family
    beta = _param(args.beta)
    if args.perm is not None:
        w = P.parse_perm(args.perm)
    elif args.word is not None and fam not in ("bott_samelson",):
        word = P.parse_word(args.word)
        w = P.from_word(word, args.n or (max(word, default=0) + 1))
    else:
        w = None
    comp = _composition(args.code) if args.code is not None else None
    if fam in KEY_VARIANTS:
        if comp is None:
            if w is None:
                raise UsageError("key families need --code (or a permutation, whose code is used)")
            comp = P.lehmer_code(w)
        p = F.key(comp, KEY_VARIANTS[fam], beta=beta)
    elif fam == "bott_samelson":
        if args.word is None or comp is None:
            raise UsageError("bott_samelson needs --word and --code (the exponent vector)")
        p = F.bott_samelson(P.parse_word(args.word), comp, _param(args.v))
    else:
        if w is None and comp is not None and fam != "generalized":
            w = P.code_to_perm(comp, args.n)
        if w is None and fam != "generalized":
            raise UsageError("%s needs --perm, --word or --code" % fam)
        if fam == "schubert":
            p = F.schubert(w, double=args.double)
        elif fam == "grothendieck":
            p = F.grothendieck(w, beta, double=args.double)
        elif fam == "dual_grothendieck":
            p = F.dual_grothendieck(w, beta, double=args.double)
        elif fam == "dz":
            p = F.dz(w)
        elif fam == "kn":
            conv = "sec1" if args.swap_params else F.DEFAULT_KN_CONVENTION
            word = P.parse_word(args.word) if args.word is not None else None
            p = F.kn(w, beta, _param(args.alpha), _param(args.gamma), _param(args.h), conv, word=word)
        else:
            if args.spec is None:
                raise UsageError("generalized needs --spec a=..,b=..,c=..,h=..,e=..")
            spec = Dd.OperatorSpec.parse(args.spec)
            if args.seed == "monomial":
                if comp is None:
                    raise UsageError("--seed monomial needs --code")
                p = F.generalized_family(spec, comp, "monomial")
            else:
                if w is None:
                    raise UsageError("generalized needs --perm")
                p = F.generalized_family(spec, w, args.seed)
    if args.at_one:
        p = F.at_one(p)
    return _poly_out(p, args.emit)


# kernel -------------------------------------------------------------------

def _kernel_table(args):
    p = args.p
    if args.algebra == "IP" and args.kind == "C":
        return K.coefficient_table("GK", args.n, p=p, gk_mode=args.gk_mode)
    if args.algebra == "QPC":
        return K.coefficient_table("KQ", args.n, p=p)
    k = args.k if args.k is not None else args.m
    if args.algebra == "PF" and k is None:
        raise UsageError("PF needs --k or --m")
    alg = Q.algebra(args.algebra, args.n, k=k, beta=_param(args.beta) if args.beta != "1" else 1)
    return K.expand(K.KernelSpec(args.kind, args.n, args.m, p), alg)


def kernel_rows(table):
    rows = []
    for w in sorted(table, key=lambda w: (len(w), w)):
        shape = list(W.shape(W.rsk_insert(w))) if w else []
        rows.append({"word": P.word_str(w), "shape": shape, "coefficient": to_text(table[w])})
    return rows


def cmd_kernel(args):
    if args.kind == "F" and args.m is None:
        raise UsageError("the F kernel needs --m")
    rows = kernel_rows(_kernel_table(args))
    emit = args.emit
    if emit.endswith(".json"):
        with open(emit, "w") as fh:
            json.dump(rows, fh, indent=1)
            fh.write("\n")
        return "wrote %d rows to %s" % (len(rows), emit)
    if emit == "json":
        return json.dumps(rows, indent=1)
    if emit == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["word", "shape", "coefficient"])
        for r in rows:
            wr.writerow([r["word"], " ".join(map(str, r["shape"])), r["coefficient"]])
        return buf.getvalue().rstrip("\n")
    if emit != "text":
        raise UsageError("kernel --emit takes text, json, csv or a *.json filename")
    return "\n".join("%-10s %-10s %s" % (r["word"] or "e", r["shape"], r["coefficient"]) for r in rows)


# basis --------------------------------------------------------------------

def _basis_algebra(args):
    name = args.algebra
    if name == "PF" and args.k is None:
        raise UsageError("PF needs --k")
    return Q.algebra(name, args.n, k=args.k, beta=_param(args.beta) if args.beta != "1" else 1)


def cmd_basis(args):
    alg = _basis_algebra(args)
    if args.emit in ("hilbert", "text"):
        h = alg.hilbert()
        if args.emit == "hilbert":
            return ",".join(map(str, h))
        return "%s: dim %d, hilbert (%s)" % (alg, sum(h), ",".join(map(str, h)))
    basis = alg.basis()
    if args.emit == "tableaux":
        if not isinstance(alg, Q.Plactic):
            raise UsageError("--emit tableaux needs a plactic-type algebra (PC or PF)")
        return "\n".join(json.dumps([list(r) for r in W.rsk_insert(w)]) for w in basis)
    if args.emit == "json":
        return json.dumps({"algebra": repr(alg), "hilbert": alg.hilbert(),
                           "basis": [P.word_str(w) for w in basis]})
    raise UsageError("basis --emit takes hilbert, tableaux, text or json")


# count --------------------------------------------------------------------

def cmd_count(args):
    if args.seq:
        rows = C.sequence(args.seq, args.upto)
        header = ("n", "value")
    elif args.a_lambda is not None:
        if args.N is None:
            raise UsageError("--a-lambda needs --N")
        lam = _partition(args.a_lambda)
        v = C.a_lambda(lam, args.N, mode="t-poly" if args.t else "count")
        rows = [(P.word_str(lam) or "()", to_text(v) if isinstance(v, Poly) else v)]
        header = ("lambda", "value")
    elif args.genocchi is not None:
        g = C.genocchi_suite(args.genocchi)
        rows = [(k, v) for k, v in g.items() if k != "n"]
        header = ("key", "value")
    elif args.identities:
        rows = [(r["name"], r["instance"], r["lhs"], r["rhs"], r["ok"]) for r in C.identity_suite(args.upto)]
        header = ("identity", "instance", "lhs", "rhs", "ok")
    else:
        raise UsageError("count needs --seq, --a-lambda, --genocchi or --identities")
    if args.emit == "json":
        return json.dumps([dict(zip(header, r)) for r in rows], default=str)
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(header)
    for r in rows:
        wr.writerow(r)
    return buf.getvalue().rstrip("\n")


# lattice ------------------------------------------------------------------

def cmd_lattice(args):
    lat = L.Lattice(args.n)
    if args.emit == "dot":
        return L.to_dot(lat).rstrip("\n")
    r_all, r_perm = L.rank_polynomials(args.n)
    data = {"n": args.n, "size": len(lat), "covers": len(lat.covers()),
            "rank_polynomial": r_all, "permutation_ranks": r_perm}
    if args.emit == "json":
        return json.dumps(data)
    return "\n".join("%s: %s" % (k, v) for k, v in data.items())


# word ---------------------------------------------------------------------

def cmd_word(args):
    w = P.parse_word(args.word)
    n = args.n or (max(w, default=0) + 1)
    op = args.op
    if op == "rsk":
        out = [list(r) for r in W.rsk_insert(w)]
    elif op == "eg":
        out = [list(r) for r in W.eg_insert(w)] if W.eg_insert(w) is not None else None
    elif op == "bottom-code":
        out = W.bottom_code(w, n - 1)
    elif op == "closure":
        cls = W.closure(w, W.preset(args.algebra, n, beta=_param(args.beta)))
        members = sorted(cls.members, key=W.canonical_key)
        out = {"zero": cls.zero, "size": len(members), "members": [P.word_str(m) for m in members]}
    else:
        alg = Q.algebra(args.algebra, n, k=args.k, beta=_param(args.beta) if args.beta != "1" else 1)
        c, rep = alg.normalize(w)
        out = {"coefficient": None if rep is None else str(c), "normal_form": None if rep is None else P.word_str(rep)}
    if args.emit == "json":
        return json.dumps(out, default=str)
    if isinstance(out, dict):
        return "\n".join("%s: %s" % kv for kv in out.items())
    return str(out)


# verify -------------------------------------------------------------------

def cmd_verify(args):
    suites = V.SUITES if args.suite == ["all"] else args.suite
    reports = []
    for s in suites:
        if s not in V.SUITES:
            raise UsageError("unknown suite %r (choose from %s, all)" % (s, ", ".join(V.SUITES)))
        try:
            reports.append(V.run_suite(s, jobs=args.jobs, only=args.check))
        except KeyError as e:
            raise UsageError(str(e.args[0]))
    text = V.format_json(reports) if args.emit == "json" else "\n".join(V.format_text(r) for r in reports)
    return text, (0 if all(r.ok for r in reports) else 1)


# parser -------------------------------------------------------------------

def build_parser():
    ap = _Parser(prog="plactic-forge", description=__doc__)
    sub = ap.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("poly", help="polynomial families")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("--perm", help="one-line permutation, e.g. 2143 or 2,1,4,3")
    p.add_argument("--word", help="reduced word, e.g. 121")
    p.add_argument("--code", help="composition / code, e.g. 021")
    p.add_argument("--n", type=int)
    p.add_argument("--beta", default="beta")
    p.add_argument("--alpha", default="alpha")
    p.add_argument("--gamma", default="0")
    p.add_argument("--h", default="1")
    p.add_argument("--v", default="v")
    p.add_argument("--double", action="store_true")
    p.add_argument("--spec", help="operator parameters a=..,b=..,c=..,h=..,e=..")
    p.add_argument("--seed", choices=("staircase", "double", "monomial"), default="staircase")
    p.add_argument("--swap-params", action="store_true", help="KN with beta and alpha exchanged")
    p.add_argument("--at-one", action="store_true", help="set every x and y to 1")
    p.add_argument("--emit", choices=("text", "json"), default="text")

    k = sub.add_parser("kernel", help="Cauchy kernel expansions")
    k.add_argument("--kind", choices=("C", "F"), default="C")
    k.add_argument("--n", type=int, default=4)
    k.add_argument("--m", type=int)
    k.add_argument("--k", type=int)
    k.add_argument("--algebra", choices=KERNEL_ALGEBRAS, default="PC")
    k.add_argument("--p", choices=("formal", "x", "xy"), default="formal")
    k.add_argument("--beta", default="1")
    k.add_argument("--gk-mode", choices=("refined", "direct"), default="refined")
    k.add_argument("--emit", default="text", help="text, json, csv or a *.json filename")

    b = sub.add_parser("basis", help="quotient bases and Hilbert series")
    b.add_argument("--algebra", required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--k", type=int)
    b.add_argument("--beta", default="1")
    b.add_argument("--emit", choices=("hilbert", "tableaux", "text", "json"), default="hilbert")

    c = sub.add_parser("count", help="enumerative formulas")
    c.add_argument("--seq", choices=C.SEQUENCES)
    c.add_argument("--upto", type=int, default=7)
    c.add_argument("--a-lambda", help="shape, e.g. 21 or 2,1")
    c.add_argument("--N", type=int)
    c.add_argument("--t", action="store_true", help="t-polynomial instead of the count")
    c.add_argument("--genocchi", type=int)
    c.add_argument("--identities", action="store_true")
    c.add_argument("--emit", choices=("csv", "json", "text"), default="csv")

    lt = sub.add_parser("lattice", help="monotone triangle lattice")
    lt.add_argument("--n", type=int, required=True)
    lt.add_argument("--emit", choices=("text", "json", "dot"), default="text")

    wd = sub.add_parser("word", help="word normal forms and classes")
    wd.add_argument("--word", required=True)
    wd.add_argument("--algebra", default="P")
    wd.add_argument("--n", type=int)
    wd.add_argument("--k", type=int)
    wd.add_argument("--beta", default="1")
    wd.add_argument("--op", choices=("normal", "closure", "rsk", "eg", "bottom-code"), default="normal")
    wd.add_argument("--emit", choices=("text", "json"), default="text")

    vf = sub.add_parser("verify", help="run verification suites")
    vf.add_argument("--suite", nargs="+", default=["all"])
    vf.add_argument("--check", nargs="+", help="run only the named checks")
    vf.add_argument("--jobs", type=int, default=1)
    vf.add_argument("--emit", choices=("text", "json"), default="text")
    return ap


COMMANDS = {"poly": cmd_poly, "kernel": cmd_kernel, "basis": cmd_basis, "count": cmd_count,
            "lattice": cmd_lattice, "word": cmd_word, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required: %s" % ", ".join(COMMANDS))
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be >= 1")
        res = COMMANDS[args.command](args)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 2
    except (ValueError, KeyError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text, code = res if isinstance(res, tuple) else (res, 0)
    print(text, file=out)
    return code


if __name__ == "__main__":
    sys.exit(main())
