//! Text format for complexes of projectives over a quiver algebra:
//!
//! ```text
//! complex
//! term -1 v2:1
//! term 0 v1:2
//! diff -1 1x2
//! 0, alpha
//! end
//! ```
//!
//! Each `diff` line is followed by one line per row, entries separated by
//! commas. An entry `x` in row `i`, column `j` maps `Ae_s → Ae_t` by `y ↦ y·x`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::quiver::PathAlgebra;

use super::amatrix::AMatrix;
use super::complex::ProjComplex;
use super::context::ProjContext;

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn parse_int(tok: &str, line: usize) -> Result<i64> {
    tok.parse().map_err(|_| syntax(line, 1, format!("expected an integer, found `{tok}`")))
}

pub fn parse_complex<F: Field>(text: &str, pa: &PathAlgebra<F>, ctx: &Arc<ProjContext<F>>) -> Result<ProjComplex<F>> {
    let a = &ctx.algebra;
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim())).filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, "complex")) => {}
        Some((n, _)) => return Err(syntax(n, 1, "expected `complex`")),
        None => return Err(syntax(1, 1, "empty complex file")),
    }
    let mut terms: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
    let mut diffs: BTreeMap<i32, AMatrix<F>> = BTreeMap::new();
    let mut ended = false;
    while let Some((n, l)) = lines.next() {
        let words: Vec<&str> = l.split_whitespace().collect();
        match words[0] {
            "end" => {
                ended = true;
                break;
            }
            "term" => {
                if words.len() != 3 {
                    return Err(syntax(n, 1, "expected `term <degree> <vertex:mult,...>`"));
                }
                let d = parse_int(words[1], n)? as i32;
                let mut t = Vec::new();
                if words[2] != "0" {
                    for part in words[2].split(',') {
                        let (v, m) = part.split_once(':').unwrap_or((part, "1"));
                        let s = ctx.index_of(v).ok_or_else(|| Error::UnknownName { name: v.to_string(), line: n })?;
                        let m = parse_int(m, n)?;
                        if m < 0 {
                            return Err(syntax(n, 1, "negative multiplicity"));
                        }
                        t.extend(std::iter::repeat(s).take(m as usize));
                    }
                }
                if terms.insert(d, t).is_some() {
                    return Err(syntax(n, 1, format!("degree {d} given twice")));
                }
            }
            "diff" => {
                if words.len() != 3 {
                    return Err(syntax(n, 1, "expected `diff <degree> <rows>x<cols>`"));
                }
                let d = parse_int(words[1], n)? as i32;
                let (r, c) = words[2].split_once('x').ok_or_else(|| syntax(n, 1, "expected `<rows>x<cols>`"))?;
                let (r, c) = (parse_int(r, n)? as usize, parse_int(c, n)? as usize);
                let mut m = AMatrix::zeros(a, r, c);
                for i in 0..r {
                    let (rn, row) = lines.next().ok_or_else(|| syntax(n, 1, "missing differential rows"))?;
                    let entries: Vec<&str> = row.split(',').map(str::trim).collect();
                    if entries.len() != c {
                        return Err(syntax(rn, 1, format!("expected {c} entries, found {}", entries.len())));
                    }
                    for (j, e) in entries.iter().enumerate() {
                        if *e != "0" {
                            m.set(i, j, pa.parse_element(e).map_err(|err| match err {
                                Error::Syntax { column, message, .. } => Error::Syntax { line: rn, column, message },
                                Error::UnknownName { name, .. } => Error::UnknownName { name, line: rn },
                                other => other,
                            })?);
                        }
                    }
                }
                if diffs.insert(d, m).is_some() {
                    return Err(syntax(n, 1, format!("differential {d} given twice")));
                }
            }
            other => return Err(syntax(n, 1, format!("unexpected `{other}`"))),
        }
    }
    if !ended {
        return Err(syntax(text.lines().count().max(1), 1, "missing `end`"));
    }
    let (Some(&lo), Some(&hi)) = (terms.keys().next(), terms.keys().next_back()) else {
        return Ok(ProjComplex::zero(ctx));
    };
    let term_list: Vec<Vec<usize>> = (lo..=hi).map(|d| terms.get(&d).cloned().unwrap_or_default()).collect();
    let diff_list: Vec<AMatrix<F>> = (lo..hi)
        .map(|d| diffs.remove(&d).unwrap_or_else(|| AMatrix::zeros(a, term_list[(d - lo) as usize].len(), term_list[(d - lo + 1) as usize].len())))
        .collect();
    if let Some((&d, _)) = diffs.iter().next() {
        return Err(Error::DifferentialMismatch(format!("differential in degree {d} is outside the term range")));
    }
    ProjComplex::new(ctx, lo, term_list, diff_list)
}

/// Path expression of an element; integral coefficients only.
pub fn format_element<F: Field>(pa: &PathAlgebra<F>, x: &[F::Elem]) -> Result<String> {
    let f = pa.field();
    let mut parts: Vec<String> = Vec::new();
    for (c, p) in x.iter().zip(&pa.basis_paths) {
        if f.is_zero(c) {
            continue;
        }
        let (neg, mag) = match f.to_scalar(c) {
            Scalar::Rational(r) => {
                if !r.denom().is_one() {
                    return Err(Error::Parse(format!("coefficient {r} is not integral")));
                }
                let n = r.numer().clone();
                if n < num_bigint::BigInt::from(0) { (true, (-n).to_string()) } else { (false, n.to_string()) }
            }
            Scalar::Residue { value, .. } => (false, value.to_string()),
        };
        let word = pa.presentation.path_label(p);
        let body = if mag == "1" { word } else { format!("{mag}*{word}") };
        parts.push(match (parts.is_empty(), neg) {
            (true, true) => format!("-{body}"),
            (true, false) => body,
            (false, true) => format!("- {body}"),
            (false, false) => format!("+ {body}"),
        });
    }
    Ok(if parts.is_empty() { "0".into() } else { parts.join(" ") })
}

pub fn print_complex<F: Field>(c: &ProjComplex<F>, pa: &PathAlgebra<F>) -> Result<String> {
    let ctx = &c.ctx;
    let mut out = String::from("complex\n");
    if !c.is_zero() {
        for d in c.lo..=c.hi() {
            let t = c.term(d);
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &s in t {
                match counts.last_mut() {
                    Some((v, m)) if *v == s => *m += 1,
                    _ => counts.push((s, 1)),
                }
            }
            let list = if counts.is_empty() { "0".to_string() } else { counts.iter().map(|(s, m)| format!("{}:{m}", ctx.names[*s])).collect::<Vec<_>>().join(",") };
            out.push_str(&format!("term {d} {list}\n"));
        }
        for d in c.lo..c.hi() {
            let m = c.diff(d);
            out.push_str(&format!("diff {d} {}x{}\n", m.rows, m.cols));
            for r in 0..m.rows {
                let row: Vec<String> = (0..m.cols).map(|j| format_element(pa, m.get(r, j))).collect::<Result<_>>()?;
                out.push_str(&row.join(", "));
                out.push('\n');
            }
        }
    }
    out.push_str("end\n");
    Ok(out)
}
