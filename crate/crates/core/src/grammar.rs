//! Context-free grammars as substitution rules, and the formal derivative they induce.

use std::collections::HashMap;
use std::sync::LazyLock;

use num_traits::Zero;
use sha2::{Digest, Sha256};

use crate::algebra::{LaurentPoly, Monomial, Rational, VarSet};
use crate::error::{Error, Result};

const BUILTIN_SOURCES: [(&str, &str); 4] = [
    ("G", include_str!("../grammars/G.gr")),
    ("g1", include_str!("../grammars/g1.gr")),
    ("g2", include_str!("../grammars/g2.gr")),
    ("g3", include_str!("../grammars/g3.gr")),
];

static BUILTINS: LazyLock<Vec<Grammar>> = LazyLock::new(|| {
    BUILTIN_SOURCES
        .iter()
        .map(|(name, src)| {
            parse_grammar(src).unwrap_or_else(|e| panic!("built-in grammar {name}: {e}"))
        })
        .collect()
});

/// A set of rules `variable -> Laurent polynomial`, one per declared variable.
///
/// Equality compares variables and rules; the name and source text are not significant.
#[derive(Clone, Debug)]
pub struct Grammar {
    name: Option<String>,
    vars: VarSet,
    rules: Vec<LaurentPoly>,
    source_hash: String,
}

impl Grammar {
    /// One of the shipped grammars: `G`, `g1`, `g2` or `g3`.
    pub fn builtin(name: &str) -> Option<&'static Grammar> {
        BUILTIN_SOURCES
            .iter()
            .position(|(n, _)| *n == name)
            .map(|i| &BUILTINS[i])
    }

    /// The six-variable grammar `G`.
    pub fn g() -> &'static Grammar {
        Self::builtin("G").expect("G is built in")
    }

    pub fn builtin_source(name: &str) -> Option<&'static str> {
        BUILTIN_SOURCES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| *s)
    }

    /// Resolves a built-in name or reads a grammar file from disk.
    pub fn load(name_or_path: &str) -> Result<Grammar> {
        if let Some(g) = Self::builtin(name_or_path) {
            return Ok(g.clone());
        }
        let text = std::fs::read_to_string(name_or_path)?;
        parse_grammar(&text)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn rule(&self, var: &str) -> Result<&LaurentPoly> {
        let id = self.vars.require(var)?;
        Ok(&self.rules[id as usize])
    }

    /// SHA-256 of the grammar's source text, hex encoded.
    pub fn source_hash(&self) -> &str {
        &self.source_hash
    }

    pub fn var(&self, name: &str) -> Result<LaurentPoly> {
        LaurentPoly::var(&self.vars, name)
    }

    pub fn parse_poly(&self, text: &str) -> Result<LaurentPoly> {
        LaurentPoly::parse(&self.vars, text)
    }

    /// The formal derivative: linear, Leibniz, and zero on constants.
    ///
    /// A monomial `prod v_i^{e_i}` maps to `sum_i e_i v_i^{e_i - 1} (prod_{j != i} v_j^{e_j}) rule(v_i)`.
    pub fn derive(&self, p: &LaurentPoly) -> Result<LaurentPoly> {
        if p.vars() != &self.vars {
            let stray = p
                .vars()
                .names()
                .iter()
                .find(|n| self.vars.index_of(n).is_none())
                .cloned()
                .unwrap_or_else(|| p.vars().names().join(" "));
            return Err(Error::UnknownVariable(stray));
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(p.len() * 4);
        for (m, c) in p.terms() {
            for &(v, e) in m.entries() {
                let factor = c * e.to_rational();
                let base = m.with_exponent_added(v, -crate::algebra::HalfInt::ONE);
                for (rm, rc) in self.rules[v as usize].terms() {
                    *acc.entry(base.mul(rm)).or_insert_with(Rational::zero) += &factor * rc;
                }
            }
        }
        Ok(LaurentPoly::from_accumulator(&self.vars, acc))
    }

    /// `D^n(seed)`.
    pub fn derive_n(&self, seed: &LaurentPoly, n: usize) -> Result<LaurentPoly> {
        let mut cache = DerivationCache::new(self, seed.clone())?;
        Ok(cache.get(n)?.clone())
    }

    /// `[D^0(seed), ..., D^order(seed)]`, the coefficients of `t^n/n!` in `Gen(seed, t)`.
    pub fn gen_coeffs(&self, seed: &LaurentPoly, order: usize) -> Result<Vec<LaurentPoly>> {
        let mut cache = DerivationCache::new(self, seed.clone())?;
        cache.extend_to(order)?;
        Ok(cache.into_coefficients())
    }

    /// Maps every rule image through `bindings` into `target`.
    pub fn specialize_rules(
        &self,
        target: &VarSet,
        bindings: &std::collections::BTreeMap<String, LaurentPoly>,
    ) -> Result<Vec<(String, LaurentPoly)>> {
        self.vars
            .names()
            .iter()
            .zip(&self.rules)
            .map(|(n, r)| Ok((n.clone(), r.substitute_into(target, bindings)?)))
            .collect()
    }
}

impl PartialEq for Grammar {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.rules == other.rules
    }
}

impl Eq for Grammar {}

/// Memoized powers `D^n(seed)` for one grammar and seed.
#[derive(Clone, Debug)]
pub struct DerivationCache<'g> {
    grammar: &'g Grammar,
    coefficients: Vec<LaurentPoly>,
}

impl<'g> DerivationCache<'g> {
    pub fn new(grammar: &'g Grammar, seed: LaurentPoly) -> Result<Self> {
        if seed.vars() != grammar.vars() {
            return Err(Error::VarSetMismatch {
                left: seed.vars().names().join(" "),
                right: grammar.vars().names().join(" "),
            });
        }
        Ok(DerivationCache {
            grammar,
            coefficients: vec![seed],
        })
    }

    pub fn seed(&self) -> &LaurentPoly {
        &self.coefficients[0]
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        while self.coefficients.len() <= n {
            let next = self
                .grammar
                .derive(self.coefficients.last().expect("seed"))?;
            self.coefficients.push(next);
        }
        Ok(())
    }

    pub fn get(&mut self, n: usize) -> Result<&LaurentPoly> {
        self.extend_to(n)?;
        Ok(&self.coefficients[n])
    }

    pub fn coefficients(&self) -> &[LaurentPoly] {
        &self.coefficients
    }

    pub fn into_coefficients(self) -> Vec<LaurentPoly> {
        self.coefficients
    }
}

/// Parses the line-oriented grammar format.
///
/// ```text
/// # comment
/// name: G
/// vars: x y z
/// rule x -> x*y
/// rule y -> 3/2*x^-1/2*z
/// ```
pub fn parse_grammar(text: &str) -> Result<Grammar> {
    let mut name = None;
    let mut vars: Option<VarSet> = None;
    let mut rules: Vec<Option<LaurentPoly>> = Vec::new();
    let perr = |line: usize, msg: String| Error::Parse { line, msg };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
        } else if let Some(rest) = line.strip_prefix("vars:") {
            if vars.is_some() {
                return Err(perr(line_no, "duplicate `vars:` line".into()));
            }
            let names: Vec<&str> = rest.split_whitespace().collect();
            for n in &names {
                if !is_identifier(n) {
                    return Err(perr(line_no, format!("bad variable name `{n}`")));
                }
            }
            if names.is_empty() {
                return Err(perr(line_no, "no variables declared".into()));
            }
            let vs = VarSet::new(&names).map_err(|e| perr(line_no, e.to_string()))?;
            rules = vec![None; vs.len()];
            vars = Some(vs);
        } else if let Some(rest) = line.strip_prefix("rule") {
            let vs = vars
                .as_ref()
                .ok_or_else(|| perr(line_no, "`rule` before `vars:`".into()))?;
            let (lhs, rhs) = rest
                .split_once("->")
                .ok_or_else(|| perr(line_no, "expected `rule <var> -> <expr>`".into()))?;
            let lhs = lhs.trim();
            let id = vs
                .index_of(lhs)
                .ok_or_else(|| perr(line_no, format!("rule for undeclared variable `{lhs}`")))?;
            if rules[id as usize].is_some() {
                return Err(perr(line_no, format!("duplicate rule for `{lhs}`")));
            }
            let image = LaurentPoly::parse(vs, rhs).map_err(|e| match e {
                Error::Parse { msg, .. } => perr(line_no, msg),
                Error::UnknownVariable(v) => {
                    perr(line_no, format!("undeclared variable `{v}` in rule"))
                }
                other => perr(line_no, other.to_string()),
            })?;
            rules[id as usize] = Some(image);
        } else {
            return Err(perr(line_no, format!("cannot parse `{line}`")));
        }
    }

    let vars = vars.ok_or_else(|| Error::Grammar("missing `vars:` line".into()))?;
    let missing: Vec<&str> = vars
        .names()
        .iter()
        .zip(&rules)
        .filter(|(_, r)| r.is_none())
        .map(|(n, _)| n.as_str())
        .collect();
    if !missing.is_empty() {
        return Err(Error::Grammar(format!(
            "every variable needs a rule (missing: {})",
            missing.join(" ")
        )));
    }
    Ok(Grammar {
        name,
        vars,
        rules: rules.into_iter().map(|r| r.expect("checked")).collect(),
        source_hash: hex::encode(Sha256::digest(text.as_bytes())),
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests;
