//! Quivers with relations: parsing, compilation to structure constants, and
//! verification of presentations against given algebras.
//!
//! Paths compose left to right: `alpha*beta` is `alpha` followed by `beta`.

mod compile;
mod parse;
mod verify;

use std::fmt;

use crate::field::FieldSpec;

pub use compile::{PathAlgebra, DEFAULT_LENGTH_BOUND};
pub use parse::{parse_poly, parse_presentation};
pub use verify::{arrow_slices, gabriel_skeleton, verify_presentation, Assignment, GabrielQuiver, PresentationMatch, SearchOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A path: start vertex, end vertex and the arrows traversed (empty for a
/// trivial path).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }
    pub fn len(&self) -> usize {
        self.arrows.len()
    }
    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }
    /// Concatenation, if the endpoints match.
    pub fn then(&self, other: &Path) -> Option<Path> {
        (self.target == other.source).then(|| Path {
            source: self.source,
            target: other.target,
            arrows: self.arrows.iter().chain(&other.arrows).copied().collect(),
        })
    }
}

/// Integer linear combination of paths sharing their endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPoly {
    pub terms: Vec<(i64, Path)>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: Vec::new() }
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.source, p.target))
    }
    pub fn min_length(&self) -> Option<usize> {
        self.terms.iter().map(|(_, p)| p.len()).min()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub field: FieldSpec,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<NcPoly>,
}

impl Presentation {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn path_label(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            self.vertices[p.source].clone()
        } else {
            p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    }

    pub fn poly_label(&self, r: &NcPoly) -> String {
        if r.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (c, p)) in r.terms.iter().enumerate() {
            let word = self.path_label(p);
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i == 0 {
                if sign == "-" {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            if mag != 1 {
                s.push_str(&format!("{mag}*"));
            }
            s.push_str(&word);
        }
        s
    }

    /// Same quiver and relations over another field.
    pub fn with_field(&self, field: FieldSpec) -> Self {
        Presentation { field, ..self.clone() }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", self.field)?;
        for v in &self.vertices {
            writeln!(f, "vertex {v}")?;
        }
        for a in &self.arrows {
            writeln!(f, "arrow {} {} {}", a.name, self.vertices[a.source], self.vertices[a.target])?;
        }
        writeln!(f, "relations")?;
        for r in &self.relations {
            writeln!(f, "{}", self.poly_label(r))?;
        }
        writeln!(f, "end")
    }
}
