#![allow(dead_code)]

//! Shared fixtures for the integration suites: fixture loading and the
//! expected operation tables of the nine-element algebra, transcribed
//! cell by cell as published. Cells are compared as sets, so member
//! order inside braces is irrelevant.

use std::path::PathBuf;
use unsharp_core::poset::ElemSet;
use unsharp_core::tense::{Proposition, TimeFrame};
use unsharp_core::{format, EffectAlgebra};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture readable")
}

pub fn fig1() -> EffectAlgebra {
    format::load_algebra(&fixture("fig1.ea")).expect("fig1 validates")
}

pub fn chain_frame() -> TimeFrame {
    format::parse_frame(&fixture("ex9.tf")).expect("frame parses")
}

pub fn sample_props(ea: &EffectAlgebra, frame: &TimeFrame) -> Vec<(String, Proposition)> {
    format::parse_props(&fixture("ex9.pf"), ea, frame.times()).expect("props parse")
}

/// Parses an expected cell: `-` is undefined, `{x,y}` a set, anything
/// else a single element.
pub fn parse_cell(ea: &EffectAlgebra, cell: &str) -> Option<ElemSet> {
    if cell == "-" {
        return None;
    }
    if let Some(inner) = cell.strip_prefix('{').and_then(|c| c.strip_suffix('}')) {
        return Some(ElemSet::from_iter(
            inner.split(',').map(|id| ea.lookup(id).expect("known id")),
        ));
    }
    Some(ElemSet::singleton(ea.lookup(cell).expect("known id")))
}

/// Row-major 9x9 tables over the canonical order `0 a b c d c' b' a' 1`.
pub type Table9 = [[&'static str; 9]; 9];

#[rustfmt::skip]
pub const ODOT_TABLE: Table9 = [
    ["-", "-", "-", "-", "-", "-", "-", "-", "0"],
    ["-", "-", "-", "-", "-", "-", "-", "0", "a"],
    ["-", "-", "-", "-", "-", "-", "0", "-", "b"],
    ["-", "-", "-", "-", "-", "0", "-", "-", "c"],
    ["-", "-", "-", "-", "0", "-", "b", "-", "d"],
    ["-", "-", "-", "0", "-", "-", "a", "b", "c'"],
    ["-", "-", "0", "-", "b", "a", "d", "c", "b'"],
    ["-", "0", "-", "-", "-", "b", "c", "-", "a'"],
    ["0", "a", "b", "c", "d", "c'", "b'", "a'", "1"],
];

#[rustfmt::skip]
pub const ARROW_TABLE: Table9 = [
    ["1", "1", "1", "1", "1", "1", "1", "1", "1"],
    ["a'", "1", "a'", "a'", "a'", "1", "1", "a'", "1"],
    ["b'", "b'", "1", "b'", "1", "1", "1", "1", "1"],
    ["c'", "c'", "c'", "1", "c'", "c'", "1", "1", "1"],
    ["d", "d", "b'", "d", "1", "b'", "1", "b'", "1"],
    ["c", "b'", "a'", "c", "a'", "1", "{a',b'}", "a'", "1"],
    ["b", "c'", "d", "a'", "b'", "{d,c'}", "1", "{d,a'}", "1"],
    ["a", "a", "c'", "b'", "c'", "c'", "{b',c'}", "1", "1"],
    ["0", "a", "b", "c", "d", "c'", "b'", "a'", "1"],
];

#[rustfmt::skip]
pub const SQUIG_TABLE: Table9 = [
    ["1", "-", "-", "-", "-", "-", "-", "-", "-"],
    ["a'", "1", "-", "-", "-", "-", "-", "-", "-"],
    ["b'", "-", "1", "-", "-", "-", "-", "-", "-"],
    ["c'", "-", "-", "1", "-", "-", "-", "-", "-"],
    ["d", "-", "b'", "-", "1", "-", "-", "-", "-"],
    ["c", "b'", "a'", "-", "-", "1", "-", "-", "-"],
    ["b", "c'", "d", "a'", "b'", "-", "1", "-", "-"],
    ["a", "-", "c'", "b'", "-", "-", "-", "1", "-"],
    ["0", "a", "b", "c", "d", "c'", "b'", "a'", "1"],
];

/// The everywhere-defined implication built from maximal common lower
/// bounds coincides with the product-based one on this algebra.
pub const DOUBLE_TABLE: Table9 = ARROW_TABLE;

/// One published cell (row `a`, column `b'`) is inconsistent with the
/// operation's definition and with the complement identities relating
/// it to the implication table; this transcription carries the value
/// the definition forces, `{a,d}`.
#[rustfmt::skip]
pub const OTIMES_TABLE: Table9 = [
    ["0", "0", "0", "0", "0", "0", "0", "0", "0"],
    ["0", "a", "0", "0", "b", "a", "{a,d}", "0", "a"],
    ["0", "0", "0", "0", "0", "{a,b}", "0", "{b,c}", "b"],
    ["0", "0", "0", "c", "b", "0", "{c,d}", "c", "c"],
    ["0", "a", "0", "c", "0", "a", "b", "c", "d"],
    ["0", "a", "b", "0", "d", "c'", "a", "b", "c'"],
    ["0", "a", "0", "c", "b", "a", "d", "c", "b'"],
    ["0", "0", "b", "c", "d", "b", "c", "a'", "a'"],
    ["0", "a", "b", "c", "d", "c'", "b'", "a'", "1"],
];

/// The published three-point evaluation table: one expression per row,
/// one cell per time point. The cell `(G(p)=>G(q))(2)` is printed
/// `{b,1}` in the source table, but its inputs equal those of the first
/// column, which forces `{b',1}`; the corrected value is used here.
pub const EX9_ROWS: [(&str, [&str; 3]); 26] = [
    ("p", ["a'", "c'", "a'"]),
    ("q", ["b'", "b'", "c'"]),
    ("p*q", ["c", "a", "b"]),
    ("q*p", ["c", "a", "b"]),
    ("p=>q", ["{b',c'}", "{a',b'}", "c'"]),
    ("q=>p", ["{d,a'}", "{d,c'}", "a'"]),
    ("G(p)", ["b", "b", "a'"]),
    ("G(q)", ["{a,b}", "{a,b}", "c'"]),
    ("G(p)*G(q)", ["0", "0", "b"]),
    ("G(q)*G(p)", ["0", "0", "b"]),
    ("G(p)=>G(q)", ["{b',1}", "{b',1}", "c'"]),
    ("G(q)=>G(p)", ["{a',1}", "{a',1}", "a'"]),
    ("G(phi(p*q))", ["0", "0", "b"]),
    ("G(phi(q*p))", ["0", "0", "b"]),
    ("G(phi(p=>q))", ["b", "b", "c'"]),
    ("G(phi(q=>p))", ["b", "b", "a'"]),
    ("H(p)", ["a'", "b", "b"]),
    ("H(q)", ["b'", "b'", "{a,b}"]),
    ("H(p)*H(q)", ["c", "0", "0"]),
    ("H(q)*H(p)", ["c", "0", "0"]),
    ("H(p)=>H(q)", ["{b',c'}", "1", "{b',1}"]),
    ("H(q)=>H(p)", ["{d,a'}", "d", "{a',1}"]),
    ("H(phi(p*q))", ["c", "0", "0"]),
    ("H(phi(q*p))", ["c", "0", "0"]),
    ("H(phi(p=>q))", ["{a,b}", "b", "b"]),
    ("H(phi(q=>p))", ["b", "b", "b"]),
];
