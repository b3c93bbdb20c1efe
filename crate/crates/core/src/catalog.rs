//! Built-in quandles, cochains and link diagrams.
//!
//! Entries are stored as text in the crate's file formats and loaded through
//! the public parsers. Element order of `inoue12` is `a1..a4, b1..b4, c1..c4`.

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{parse_pd, DiagramError, LinkDiagram};
use crate::homology::{parse_cochain, Cochain2, HomologyError};
use crate::quandle::{dihedral_quandle, parse_quandle, trivial_quandle, FiniteQuandle, QuandleError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CatalogKind {
    Quandle,
    Cochain,
    Diagram,
}

impl CatalogKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CatalogKind::Quandle => "quandle",
            CatalogKind::Cochain => "cochain",
            CatalogKind::Diagram => "diagram",
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub kind: CatalogKind,
    pub description: &'static str,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("no {kind} named {name:?} in the catalog")]
    NotFound { kind: &'static str, name: String },
    #[error("catalog entry {0:?} is corrupt: {1}")]
    Corrupt(String, String),
}

enum Source {
    Text(&'static str),
    Trivial(usize),
    Dihedral(usize),
}

struct Item {
    entry: CatalogEntry,
    source: Source,
}

const fn item(name: &'static str, kind: CatalogKind, description: &'static str, source: Source) -> Item {
    Item { entry: CatalogEntry { name, kind, description }, source }
}

use CatalogKind::{Cochain, Diagram, Quandle};

static ITEMS: &[Item] = &[
    item(
        "inoue12",
        Quandle,
        "12-element quasi-trivial quandle, 3 orbits of size 4",
        Source::Text(include_str!("../data/inoue12.quandle")),
    ),
    item("trivial2", Quandle, "trivial quandle of order 2", Source::Trivial(2)),
    item("trivial3", Quandle, "trivial quandle of order 3", Source::Trivial(3)),
    item("dihedral3", Quandle, "dihedral quandle of order 3, not quasi-trivial", Source::Dihedral(3)),
    item("dihedral4", Quandle, "dihedral quandle of order 4, quasi-trivial", Source::Dihedral(4)),
    item("dihedral5", Quandle, "dihedral quandle of order 5, not quasi-trivial", Source::Dihedral(5)),
    item(
        "inoue12_theta",
        Cochain,
        "Z2-valued 2-cocycle on inoue12 vanishing on orbits",
        Source::Text(include_str!("../data/inoue12_theta.cochain")),
    ),
    item(
        "zero12",
        Cochain,
        "zero Z2-valued cochain on 12 elements",
        Source::Text(include_str!("../data/zero12.cochain")),
    ),
    item(
        "hopf_lk",
        Cochain,
        "Z2-valued cocycle on trivial2 with theta(0,1) = theta(1,0) = 1",
        Source::Text(include_str!("../data/hopf_lk.cochain")),
    ),
    item("unknot", Diagram, "unknot without crossings", Source::Text(include_str!("../data/unknot.link"))),
    item("unknot_rm1", Diagram, "unknot with one kink", Source::Text(include_str!("../data/unknot_rm1.link"))),
    item("unlink3", Diagram, "trivial 3-component link", Source::Text(include_str!("../data/unlink3.link"))),
    item("hopf", Diagram, "positive Hopf link", Source::Text(include_str!("../data/hopf.link"))),
    item("trefoil", Diagram, "right-handed trefoil", Source::Text(include_str!("../data/trefoil.link"))),
    item(
        "trefoil_alt",
        Diagram,
        "right-handed trefoil with an extra kink",
        Source::Text(include_str!("../data/trefoil_alt.link")),
    ),
    item("figure8", Diagram, "figure-eight knot", Source::Text(include_str!("../data/figure8.link"))),
    item("borromean", Diagram, "Borromean rings, 6 crossings", Source::Text(include_str!("../data/borromean.link"))),
];

pub fn entries() -> impl Iterator<Item = &'static CatalogEntry> {
    ITEMS.iter().map(|i| &i.entry)
}

pub fn names(kind: CatalogKind) -> Vec<&'static str> {
    entries().filter(|e| e.kind == kind).map(|e| e.name).collect()
}

fn find(kind: CatalogKind, name: &str) -> Result<&'static Item, CatalogError> {
    ITEMS
        .iter()
        .find(|i| i.entry.kind == kind && i.entry.name == name)
        .ok_or_else(|| CatalogError::NotFound { kind: kind.as_str(), name: name.to_string() })
}

/// The stored text of an entry, for entries backed by a data file.
pub fn source_text(kind: CatalogKind, name: &str) -> Result<Option<&'static str>, CatalogError> {
    Ok(match find(kind, name)?.source {
        Source::Text(t) => Some(t),
        _ => None,
    })
}

fn corrupt(name: &str, e: impl std::fmt::Display) -> CatalogError {
    CatalogError::Corrupt(name.to_string(), e.to_string())
}

pub fn get_quandle(name: &str) -> Result<FiniteQuandle, CatalogError> {
    let r: Result<FiniteQuandle, QuandleError> = match find(Quandle, name)?.source {
        Source::Text(t) => parse_quandle(t),
        Source::Trivial(n) => trivial_quandle(n),
        Source::Dihedral(n) => dihedral_quandle(n),
    };
    r.map_err(|e| corrupt(name, e))
}

pub fn get_cochain(name: &str) -> Result<Cochain2, CatalogError> {
    let r: Result<Cochain2, HomologyError> = match find(Cochain, name)?.source {
        Source::Text(t) => parse_cochain(t),
        _ => unreachable!("cochains are stored as text"),
    };
    r.map_err(|e| corrupt(name, e))
}

pub fn get_diagram(name: &str) -> Result<LinkDiagram, CatalogError> {
    let r: Result<LinkDiagram, DiagramError> = match find(Diagram, name)?.source {
        Source::Text(t) => parse_pd(t),
        _ => unreachable!("diagrams are stored as text"),
    };
    r.map_err(|e| corrupt(name, e))
}
