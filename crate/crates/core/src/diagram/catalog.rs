//! Bundled named diagrams.
//!
//! Entries live in `data/catalog.pd`. `T_n` is generated for any `n >= 1`.

use super::braid::BraidWord;
use super::Diagram;
use crate::error::{Error, Result};

const BUNDLE: &str = include_str!("../../data/catalog.pd");

/// Bundle version, bumped whenever a stored code changes.
pub fn version() -> &'static str {
    BUNDLE
        .lines()
        .find_map(|l| l.strip_prefix("version "))
        .map(str::trim)
        .unwrap_or("0")
}

fn sections() -> Vec<(&'static str, String)> {
    let mut out: Vec<(&'static str, String)> = Vec::new();
    for line in BUNDLE.lines() {
        let body = line.split('#').next().unwrap_or("").trim();
        if let Some(rest) = body.strip_prefix('[') {
            let name = rest.split(']').next().unwrap_or("");
            out.push((name, String::new()));
        } else if !body.is_empty() {
            if let Some((_, text)) = out.last_mut() {
                text.push_str(body);
                text.push('\n');
            }
        }
    }
    out
}

/// All catalog names; `T_n` stands for the family.
pub fn names() -> Vec<String> {
    let mut v: Vec<String> = sections().into_iter().map(|(n, _)| n.to_string()).collect();
    v.insert(1, "T_n".to_string());
    v
}

fn alias(name: &str) -> &str {
    match name {
        "closure_(s1s2)^6" | "closure_(sigma1sigma2)^6" => "closure_(σ1σ2)^6",
        "chen" => "chen_braid",
        other => other,
    }
}

fn trivial_count(name: &str) -> Option<usize> {
    name.strip_prefix("T_").and_then(|n| n.parse().ok()).filter(|&n| n >= 1)
}

/// The stored records of an entry, exactly as bundled.
pub fn source(name: &str) -> Result<String> {
    if let Some(n) = trivial_count(name) {
        return Ok("O\n".repeat(n));
    }
    let key = alias(name);
    sections()
        .into_iter()
        .find(|(n, _)| *n == key)
        .map(|(_, t)| t)
        .ok_or_else(|| Error::UnknownCatalog(name.to_string()))
}

/// A named diagram.
pub fn catalog(name: &str) -> Result<Diagram> {
    let text = source(name)?;
    if text.starts_with("BR") {
        let w: BraidWord = text.parse()?;
        return Ok(w.closure());
    }
    Diagram::parse_pd(&text)
}
