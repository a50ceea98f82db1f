//! Offline sequence cache: `id: v0 v1 ...` files, b-files, and prefix comparison.

use std::path::{Path, PathBuf};

use num_bigint::BigInt;

use super::report::{CheckSpec, Evidence, Provenance, Report};
use crate::error::{Error, Result};
use crate::perm::{involution_count, specialized_poly, triangle, EnumConfig, Family};

/// Environment variable that overrides the cache location.
pub const CACHE_ENV: &str = "PCFGRAM_OEIS_CACHE";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sequence {
    pub id: String,
    pub values: Vec<BigInt>,
}

pub fn cache_dir() -> PathBuf {
    match std::env::var_os(CACHE_ENV) {
        Some(p) => PathBuf::from(p),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/oeis"),
    }
}

fn format_err(path: &str, line: usize, msg: impl Into<String>) -> Error {
    Error::SequenceFormat {
        path: path.to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_int(path: &str, line: usize, tok: &str) -> Result<BigInt> {
    tok.parse()
        .map_err(|_| format_err(path, line, format!("{tok:?} is not an integer")))
}

/// Parses `id: v0 v1 ...` lines; `#` starts a comment.
pub fn parse_sequence_file(text: &str, path: &str) -> Result<Vec<Sequence>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (id, body) = line
            .split_once(':')
            .ok_or_else(|| format_err(path, i + 1, "expected `id: values`"))?;
        let id = id.trim();
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(format_err(path, i + 1, format!("bad id {id:?}")));
        }
        let values = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| parse_int(path, i + 1, t))
            .collect::<Result<Vec<_>>>()?;
        out.push(Sequence {
            id: id.to_string(),
            values,
        });
    }
    Ok(out)
}

/// Parses `n a(n)` lines with consecutive indices.
pub fn parse_bfile(text: &str, path: &str) -> Result<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut expect: Option<BigInt> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        let (Some(n), Some(v), None) = (toks.next(), toks.next(), toks.next()) else {
            return Err(format_err(path, i + 1, "expected `n value`"));
        };
        let n = parse_int(path, i + 1, n)?;
        if let Some(e) = &expect {
            if &n != e {
                return Err(format_err(
                    path,
                    i + 1,
                    format!("index {n} out of sequence, expected {e}"),
                ));
            }
        }
        expect = Some(&n + 1);
        out.push(parse_int(path, i + 1, v)?);
    }
    Ok(out)
}

/// Reads a reference: an existing path (sequence file or b-file), or an id looked up in the cache.
pub fn load_reference(reference: &str) -> Result<Sequence> {
    let path = Path::new(reference);
    if path.is_file() {
        return read_file(path, None);
    }
    let cached = cache_dir().join(format!("{reference}.seq"));
    if cached.is_file() {
        return read_file(&cached, Some(reference));
    }
    Err(Error::Domain(format!(
        "no cached copy of {reference} in {}",
        cache_dir().display()
    )))
}

fn read_file(path: &Path, want: Option<&str>) -> Result<Sequence> {
    let text = std::fs::read_to_string(path)?;
    let shown = path.display().to_string();
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("")
        .to_string();
    let looks_like_bfile = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| !l.contains(':'));
    if looks_like_bfile {
        let id = stem
            .strip_prefix('b')
            .map(|s| format!("A{s}"))
            .unwrap_or(stem);
        return Ok(Sequence {
            id,
            values: parse_bfile(&text, &shown)?,
        });
    }
    let mut seqs = parse_sequence_file(&text, &shown)?;
    let pos = match want {
        Some(id) => seqs.iter().position(|s| s.id == id),
        None if seqs.len() == 1 => Some(0),
        None => seqs.iter().position(|s| s.id == stem),
    };
    pos.map(|i| seqs.swap_remove(i))
        .ok_or_else(|| format_err(&shown, 0, "no matching sequence in file"))
}

/// Reads a local sequence file, or a triangle CSV flattened row by row.
pub fn load_local(path: &Path) -> Result<Sequence> {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("local")
        .to_string();
    if path.extension().is_some_and(|e| e == "csv") {
        let rows = crate::perm::read_triangle_csv(std::fs::File::open(path)?)?;
        return Ok(Sequence {
            id: stem,
            values: rows.into_iter().flat_map(|(_, r)| r).collect(),
        });
    }
    read_file(path, None)
}

/// Term-by-term diff over the overlapping prefix; an empty overlap fails.
pub fn oeis_compare(local: &Sequence, reference: &Sequence) -> Report {
    let mut ev = Evidence::new();
    compare_into(&mut ev, local, reference);
    let spec = CheckSpec::for_id("oeis-cache").expect("registered");
    let spec = CheckSpec {
        id: format!("oeis:{}", reference.id),
        ..spec
    };
    let prov = Provenance {
        grammar_hash: None,
        cap: spec.cap,
        tol: None,
        sampling: None,
    };
    ev.finish(
        &spec,
        prov,
        &format!("{} against {}", local.id, reference.id),
    )
}

fn compare_into(ev: &mut Evidence, local: &Sequence, reference: &Sequence) {
    let n = local.values.len().min(reference.values.len());
    let mut first_bad = None;
    for (i, (a, b)) in local.values.iter().zip(&reference.values).enumerate() {
        let ok = ev.expect(a == b, format!("{} term {i}", reference.id), || {
            (b.to_string(), a.to_string())
        });
        if !ok && first_bad.is_none() {
            first_bad = Some(i);
        }
    }
    let verdict = match first_bad {
        None => "agree".to_string(),
        Some(i) => format!("first difference at term {i}"),
    };
    ev.note(
        format!("{} vs {}", local.id, reference.id),
        format!(
            "{n} overlapping terms ({} local, {} reference), {verdict}",
            local.values.len(),
            reference.values.len()
        ),
    );
}

/// Computed involutions, exterior peak and Eulerian triangles, and Euler numbers against the cache.
pub(crate) fn cache_check(spec: &CheckSpec) -> Result<Report> {
    let cfg = EnumConfig::large(spec.cap)?;
    let n = spec.n_max;
    let ints = |v: Vec<u64>| v.into_iter().map(BigInt::from).collect::<Vec<_>>();
    let flat = |rows: Vec<Vec<u64>>| ints(rows.into_iter().flatten().collect());
    let inv = (0..=n)
        .map(|k| involution_count(k, &cfg))
        .collect::<Result<Vec<_>>>()?;
    let one = [
        ("x".to_string(), crate::algebra::int(1)),
        ("y".to_string(), crate::algebra::int(1)),
    ]
    .into();
    let zigzag = (0..=n)
        .map(|k| {
            let v = specialized_poly(k, Family::TA, &cfg)?.eval(&one)?;
            Ok(v.to_integer())
        })
        .collect::<Result<Vec<_>>>()?;
    let computed = [
        ("A000085", ints(inv)),
        ("A000111", zigzag),
        (
            "A008292",
            flat(
                triangle(Family::Eulerian, n, &cfg)?
                    .into_iter()
                    .skip(1)
                    .collect(),
            ),
        ),
        ("A008971", flat(triangle(Family::GesselT, n, &cfg)?)),
    ];
    let mut ev = Evidence::new();
    for (id, values) in computed {
        let reference = load_reference(id)?;
        let local = Sequence {
            id: format!("computed {id}"),
            values,
        };
        compare_into(&mut ev, &local, &reference);
    }
    let prov = Provenance {
        grammar_hash: None,
        cap: spec.cap,
        tol: None,
        sampling: Some(format!("cache {}", cache_dir().display())),
    };
    Ok(ev.finish(spec, prov, "computed sequences against the offline cache"))
}
