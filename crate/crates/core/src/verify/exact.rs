//! Checks decided in the Laurent algebra or against exhaustive enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::report::{CheckSpec, Evidence, Provenance, Report};
use crate::algebra::{int, LaurentPoly, Rational};
use crate::error::Result;
use crate::grammar::Grammar;
use crate::perm::{
    enumerate_poly, for_each_permutation, g_vars, label, specialized_poly, stats, w_vars,
    EnumConfig, Family, Permutation, Scheme, Target,
};
use crate::series::egf_mul;

const D4Z: &str = "6*x*z*w^2*v + 5*z^2*w^2*u + 5*x*y*z*w*v + y*z^2*w*u + x*y^2*z*v \
                   + 3*x^2*z*v^2 + 2*x*z^2*u*v + z*w^4";

fn provenance(spec: &CheckSpec, grammar: Option<&Grammar>) -> Provenance {
    Provenance {
        grammar_hash: grammar.map(|g| g.source_hash().to_string()),
        cap: spec.cap,
        tol: None,
        sampling: None,
    }
}

fn cfg(spec: &CheckSpec) -> Result<EnumConfig> {
    EnumConfig::large(spec.cap)
}

fn bindings(
    vars: &crate::algebra::VarSet,
    pairs: &[(&str, &str)],
) -> Result<BTreeMap<String, LaurentPoly>> {
    pairs
        .iter()
        .map(|(k, v)| Ok((k.to_string(), LaurentPoly::parse(vars, v)?)))
        .collect()
}

pub(crate) fn thm_p(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let cfg = cfg(spec)?;
    let coeffs = g.gen_coeffs(&g.var("z")?, spec.n_max)?;
    let mut ev = Evidence::new();
    for (n, dz) in coeffs.iter().enumerate() {
        ev.polys(&format!("n={n}"), &enumerate_poly(n, Target::P, &cfg)?, dz);
    }
    if spec.n_max >= 4 {
        let display = g.parse_poly(D4Z)?;
        ev.polys(
            "D^4(z) against the displayed expansion",
            &display,
            &coeffs[4],
        );
        let target = g.parse_poly("x*y*z*w*v")?;
        let mut carriers = Vec::new();
        let mut err = None;
        for_each_permutation(4, |p| match label(p, Scheme::Exterior) {
            Ok(l) if l.weight == target => carriers.push(p.to_string()),
            Ok(_) => {}
            Err(e) => err = Some(e),
        });
        if let Some(e) = err {
            return Err(e);
        }
        ev.note("permutations of [4] with weight xyzwv", carriers.join(" "));
        let c = coeffs[4].coeff_of("x*y*z*w*v")?;
        ev.expect(
            c == int(carriers.len() as i64),
            "coefficient of xyzwv",
            || (carriers.len().to_string(), c.to_string()),
        );
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "D^n(z) = P_n"))
}

pub(crate) fn thm_q(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let cfg = cfg(spec)?;
    let coeffs = g.gen_coeffs(&g.var("w")?, spec.n_max)?;
    let mut ev = Evidence::new();
    for (n, dw) in coeffs.iter().enumerate().skip(1) {
        ev.polys(&format!("n={n}"), &enumerate_poly(n, Target::Q, &cfg)?, dw);
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "D^n(w) = Q_n"))
}

pub(crate) fn cor_w(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let cfg = cfg(spec)?;
    let wv = w_vars();
    let sub = bindings(&wv, &[("v", "z")])?;
    let coeffs = g.gen_coeffs(&g.var("w")?, spec.n_max)?;
    let mut ev = Evidence::new();
    for (n, dw) in coeffs.iter().enumerate().skip(1) {
        let lhs = dw.substitute_into(&wv, &sub)?;
        ev.polys(
            &format!("n={n}"),
            &enumerate_poly(n, Target::W, &cfg)?,
            &lhs,
        );
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "D^n(w)|v=z = W_n"))
}

pub(crate) fn insertion(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    cfg(spec)?.check(spec.n_max)?;
    let mut ev = Evidence::new();
    for n in 0..=spec.n_max {
        let mut bad = 0usize;
        let mut err = None;
        for_each_permutation(n, |p| {
            if err.is_some() {
                return;
            }
            let run = || -> Result<(LaurentPoly, LaurentPoly)> {
                let mut sum = LaurentPoly::zero(g.vars());
                for child in p.insertion_children() {
                    sum = sum.checked_add(&label(&child, Scheme::Exterior)?.weight)?;
                }
                Ok((g.derive(&label(p, Scheme::Exterior)?.weight)?, sum))
            };
            match run() {
                Ok((d, sum)) => {
                    if !ev.expect(d == sum, format!("pi = {p}"), || {
                        (d.to_string(), sum.to_string())
                    }) {
                        bad += 1;
                    }
                }
                Err(e) => err = Some(e),
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        ev.note(format!("n={n}"), format!("{bad} permutations disagree"));
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g)),
        "children weights sum to D(w(pi))",
    ))
}

pub(crate) fn conv(spec: &CheckSpec) -> Result<Report> {
    let cfg = cfg(spec)?;
    let vars = g_vars();
    let p: Vec<LaurentPoly> = (0..=spec.n_max + 1)
        .map(|n| enumerate_poly(n, Target::P, &cfg))
        .collect::<Result<_>>()?;
    let mut q = vec![LaurentPoly::var(&vars, "w")?];
    for n in 1..=spec.n_max {
        q.push(enumerate_poly(n, Target::Q, &cfg)?);
    }
    let rhs = egf_mul(&p[..=spec.n_max], &q)?;
    let mut ev = Evidence::new();
    for n in 1..=spec.n_max {
        ev.polys(&format!("n={n}"), &p[n + 1], &rhs[n]);
    }
    Ok(ev.finish(
        spec,
        provenance(spec, None),
        "P_{n+1} = sum C(n,k) P_k Q_{n-k}",
    ))
}

/// Residual of `f'' - (gamma/8 t^2 + beta/4 t + alpha/4) f` with `f = Gen(x^-1/2 z^-1/2)`.
pub(crate) fn ode(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let f = g.gen_coeffs(&g.parse_poly("x^-1/2*z^-1/2")?, spec.order + 2)?;
    let alpha = g.parse_poly("(y+w)^2 - 2*(x*v + z*u)")?;
    let beta = g.parse_poly("2*(w-y)*(x*v - z*u)")?;
    let gamma = g.parse_poly("2*(x*v - z*u)^2")?;
    let mut ev = Evidence::new();
    for n in 0..=spec.order {
        // coefficient of t^n/n!
        let mut rhs = alpha
            .checked_mul(&f[n])?
            .scale(&Rational::new(1.into(), 4.into()));
        if n >= 1 {
            let t = beta
                .checked_mul(&f[n - 1])?
                .scale(&Rational::new(BigInt::from(n), 4.into()));
            rhs = rhs.checked_add(&t)?;
        }
        if n >= 2 {
            let t = gamma
                .checked_mul(&f[n - 2])?
                .scale(&Rational::new(BigInt::from(n * (n - 1)), 8.into()));
            rhs = rhs.checked_add(&t)?;
        }
        ev.polys(&format!("t^{n}"), &rhs, &f[n + 2]);
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g)),
        "ODE for Gen(x^-1/2 z^-1/2)",
    ))
}

pub(crate) fn gen_xinvz(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let seed = g.parse_poly("x^-1*z")?;
    let d = g.gen_coeffs(&seed, spec.order)?;
    let a = g.parse_poly("w - y")?;
    let b = g.parse_poly("x*v - z*u")?;
    let mut ev = Evidence::new();
    for (n, dn) in d.iter().enumerate() {
        let mut sum = LaurentPoly::zero(g.vars());
        for k in 0..=n / 2 {
            // n! / (2^k (n-2k)! k!)
            let c = factorial(n)
                / (BigInt::from(2).pow(k as u32) * factorial(n - 2 * k) * factorial(k));
            let t = a.powu((n - 2 * k) as u64).checked_mul(&b.powu(k as u64))?;
            sum = sum.checked_add(&t.scale(&Rational::from_integer(c)))?;
        }
        ev.polys(&format!("n={n}"), &seed.checked_mul(&sum)?, dn);
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g)),
        "closed form of D^n(x^-1 z)",
    ))
}

pub(crate) fn quotient(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let z = g.gen_coeffs(&g.var("z")?, spec.order)?;
    let f = g.gen_coeffs(&g.parse_poly("x^-1/2*z^-1/2")?, spec.order)?;
    let target = g.gen_coeffs(&g.parse_poly("x^-1*z")?, spec.order)?;
    let z2 = egf_mul(&z, &z)?;
    let f2 = egf_mul(&f, &f)?;
    let lhs = egf_mul(&z2, &f2)?;
    let mut ev = Evidence::new();
    for n in 0..=spec.order {
        ev.polys(&format!("n={n}"), &target[n], &lhs[n]);
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g)),
        "Gen(z)^2 Gen(x^-1/2 z^-1/2)^2 = Gen(x^-1 z)",
    ))
}

/// `Gen(z) Gen(w) = Gen'(z)`.
pub(crate) fn gen_w(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let z = g.gen_coeffs(&g.var("z")?, spec.order + 1)?;
    let w = g.gen_coeffs(&g.var("w")?, spec.order)?;
    let prod = egf_mul(&z[..=spec.order], &w)?;
    let mut ev = Evidence::new();
    for n in 0..=spec.order {
        ev.polys(&format!("n={n}"), &z[n + 1], &prod[n]);
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "Gen(z) Gen(w) = Gen'(z)"))
}

pub(crate) fn stat_identities(spec: &CheckSpec) -> Result<Report> {
    cfg(spec)?.check(spec.n_max)?;
    let pat231: Permutation = "231".parse()?;
    let pat321: Permutation = "321".parse()?;
    let mut ev = Evidence::new();
    for n in 0..=spec.n_max {
        let mut bad = [0usize; 3];
        let mut err = None;
        for_each_permutation(n, |p| {
            let s = stats(p);
            let consec =
                p.consecutive_count(&pat231).unwrap() + p.consecutive_count(&pat321).unwrap();
            if !ev.expect(
                consec == s.ep2 + s.pdd,
                format!("consecutive 231+321 at {p}"),
                || ((s.ep2 + s.pdd).to_string(), consec.to_string()),
            ) {
                bad[0] += 1;
            }
            if n >= 1 {
                if !ev.expect(
                    s.peaks() == s.valleys + 1,
                    format!("peaks vs valleys at {p}"),
                    || ((s.valleys + 1).to_string(), s.peaks().to_string()),
                ) {
                    bad[1] += 1;
                }
                match label(p, Scheme::Peak) {
                    Ok(l) => {
                        let expect = expected_peak_weight(&s);
                        if !ev.expect(
                            l.weight == expect && l.labels.len() == n + 1,
                            format!("peak labeling of {p}"),
                            || (expect.to_string(), l.weight.to_string()),
                        ) {
                            bad[2] += 1;
                        }
                    }
                    Err(e) => err = Some(e),
                }
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        ev.note(
            format!("n={n}"),
            format!(
                "failures: consecutive {}, balance {}, labeling {}",
                bad[0], bad[1], bad[2]
            ),
        );
    }
    Ok(ev.finish(spec, provenance(spec, None), "statistic identities"))
}

fn expected_peak_weight(s: &crate::perm::StatVector) -> LaurentPoly {
    let e = [s.p1, s.dd, s.p2, s.dr, s.p2, s.p1].map(|k| k as i64);
    LaurentPoly::term(
        &g_vars(),
        crate::algebra::Monomial::from_int_exponents(&e),
        int(1),
    )
}

/// `P_n(x,0,1,0,y,1)` and `Q_n(x,0,1,0,y,1)/y` against alternating permutations.
pub(crate) fn ta_parity(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::g();
    let cfg = cfg(spec)?;
    let tv = Family::TA.vars();
    let sub = bindings(
        &tv,
        &[("y", "0"), ("z", "1"), ("w", "0"), ("u", "y"), ("v", "1")],
    )?;
    let p = g.gen_coeffs(&g.var("z")?, spec.n_max)?;
    let q = g.gen_coeffs(&g.var("w")?, spec.n_max)?;
    let y = LaurentPoly::var(&tv, "y")?;
    let zero = LaurentPoly::zero(&tv);
    let mut ev = Evidence::new();
    for n in 0..=spec.n_max {
        let ta = specialized_poly(n, Family::TA, &cfg)?;
        let ps = p[n].substitute_into(&tv, &sub)?;
        let qs = q[n].substitute_into(&tv, &sub)?;
        if n % 2 == 0 {
            ev.polys(&format!("P_{n} (even)"), &ta, &ps);
            if n >= 2 {
                ev.polys(&format!("Q_{n} (even)"), &zero, &qs);
            }
        } else {
            ev.polys(&format!("P_{n} (odd)"), &zero, &ps);
            if n >= 3 {
                ev.polys(&format!("Q_{n}/y (odd)"), &y.checked_mul(&ta)?, &qs);
            }
        }
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "alternating parity split"))
}

/// `g1`: `D^n(x)|y=1 = x A_n(x)`.
pub(crate) fn grammar_g1(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::builtin("g1").expect("built-in");
    let cfg = cfg(spec)?;
    let xv = Family::Eulerian.vars();
    let sub = bindings(&xv, &[("y", "1")])?;
    let x = LaurentPoly::var(&xv, "x")?;
    let mut ev = Evidence::new();
    for (n, d) in g.gen_coeffs(&g.var("x")?, spec.n_max)?.iter().enumerate() {
        let expect = x.checked_mul(&specialized_poly(n, Family::Eulerian, &cfg)?)?;
        ev.polys(&format!("n={n}"), &expect, &d.substitute_into(&xv, &sub)?);
    }
    Ok(ev.finish(
        spec,
        provenance(spec, Some(g)),
        "g1 gives x times the Eulerian polynomial",
    ))
}

/// `g2`: `D^n(x) = sum x^(2ep+1) y^(n-2ep)`.
pub(crate) fn grammar_g2(spec: &CheckSpec) -> Result<Report> {
    let g = Grammar::builtin("g2").expect("built-in");
    let cfg = cfg(spec)?;
    let tv = Family::ExtPeakXY.vars();
    let mut ev = Evidence::new();
    for (n, d) in g.gen_coeffs(&g.var("x")?, spec.n_max)?.iter().enumerate() {
        let lhs = d.substitute_into(&tv, &BTreeMap::new())?;
        ev.polys(
            &format!("n={n}"),
            &specialized_poly(n, Family::ExtPeakXY, &cfg)?,
            &lhs,
        );
    }
    Ok(ev.finish(spec, provenance(spec, Some(g)), "g2 counts exterior peaks"))
}

/// `g3`: `D^n(z)` is Fu's `P_n(x,y,z,w)`, and so is `D^n(z)` under `G` after `v -> z, u -> x`.
pub(crate) fn grammar_g3(spec: &CheckSpec) -> Result<Report> {
    let g3 = Grammar::builtin("g3").expect("built-in");
    let gg = Grammar::g();
    let cfg = cfg(spec)?;
    let fv = Family::FuP.vars();
    let chain = bindings(&fv, &[("v", "z"), ("u", "x")])?;
    let big = gg.gen_coeffs(&gg.var("z")?, spec.n_max)?;
    let mut ev = Evidence::new();
    for (n, d) in g3.gen_coeffs(&g3.var("z")?, spec.n_max)?.iter().enumerate() {
        let fu = specialized_poly(n, Family::FuP, &cfg)?;
        ev.polys(
            &format!("g3, n={n}"),
            &fu,
            &d.substitute_into(&fv, &BTreeMap::new())?,
        );
        ev.polys(
            &format!("G specialized, n={n}"),
            &fu,
            &big[n].substitute_into(&fv, &chain)?,
        );
    }
    Ok(ev.finish(spec, provenance(spec, Some(g3)), "g3 gives Fu's P_n"))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}
