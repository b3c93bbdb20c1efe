//! Resolution of input slots: a catalog name wins over a file of the same name.

use std::fs;

use qtlink::catalog::{self, CatalogError};
use qtlink::diagram::{parse_pd, LinkDiagram};
use qtlink::homology::{parse_cochain, Cochain2};
use qtlink::quandle::{parse_quandle, FiniteQuandle, QuandleError};

use crate::commands::Failure;

fn read(slot: &str, kind: &str) -> Result<String, Failure> {
    fs::read_to_string(slot)
        .map_err(|e| Failure::Usage(format!("{slot:?} is neither a catalog {kind} nor a readable file ({e})")))
}

fn from_catalog<T>(r: Result<T, CatalogError>) -> Result<Option<T>, Failure> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(CatalogError::NotFound { .. }) => Ok(None),
        Err(e) => Err(Failure::Invalid(e.to_string())),
    }
}

/// Loads a quandle, keeping axiom failures distinguishable for reporting.
pub fn quandle_result(slot: &str) -> Result<Result<FiniteQuandle, QuandleError>, Failure> {
    if let Some(q) = from_catalog(catalog::get_quandle(slot))? {
        return Ok(Ok(q));
    }
    Ok(parse_quandle(&read(slot, "quandle")?))
}

pub fn quandle(slot: &str) -> Result<FiniteQuandle, Failure> {
    quandle_result(slot)?.map_err(|e| Failure::Invalid(format!("{slot}: {e}")))
}

pub fn cochain(slot: &str) -> Result<Cochain2, Failure> {
    if let Some(c) = from_catalog(catalog::get_cochain(slot))? {
        return Ok(c);
    }
    parse_cochain(&read(slot, "cochain")?).map_err(|e| Failure::Invalid(format!("{slot}: {e}")))
}

pub fn link(slot: &str) -> Result<LinkDiagram, Failure> {
    if let Some(d) = from_catalog(catalog::get_diagram(slot))? {
        return Ok(d);
    }
    parse_pd(&read(slot, "diagram")?).map_err(|e| Failure::Invalid(format!("{slot}: {e}")))
}
