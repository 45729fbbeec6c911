//! Deterministic plain-text rendering.
//!
//! Sets print in canonical (declaration) order as `{x,y}`, singletons as
//! the bare element, undefined cells as `-`. Tables are padded per
//! column with two spaces between cells and never carry trailing
//! whitespace, so identical inputs give byte-identical output.

use crate::algebra::EffectAlgebra;
use crate::poset::ElemSet;
use crate::tense::{Proposition, SetProposition};

/// A set in canonical order; singletons render bare.
pub fn set_label(ea: &EffectAlgebra, s: ElemSet) -> String {
    match s.only() {
        Some(i) => ea.id(i).to_string(),
        None => {
            let inner: Vec<&str> = s.iter().map(|i| ea.id(i)).collect();
            format!("{{{}}}", inner.join(","))
        }
    }
}

/// A partial-operation cell: `-` when undefined.
pub fn cell_label(ea: &EffectAlgebra, v: Option<usize>) -> String {
    match v {
        Some(i) => ea.id(i).to_string(),
        None => "-".to_string(),
    }
}

/// A proposition as a tuple of element values.
pub fn prop_label(ea: &EffectAlgebra, p: &Proposition) -> String {
    let inner: Vec<&str> = p.values().iter().map(|&v| ea.id(v)).collect();
    format!("({})", inner.join(","))
}

/// A set-valued proposition as a tuple of set labels.
pub fn set_prop_label(ea: &EffectAlgebra, x: &SetProposition) -> String {
    let inner: Vec<String> = x.values().iter().map(|&v| set_label(ea, v)).collect();
    format!("({})", inner.join(","))
}

/// The binary operations the table renderer knows about.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TableOp {
    Plus,
    Odot,
    ImpArrow,
    ImpSquig,
    ImpDouble,
    Otimes,
}

impl TableOp {
    /// The corner symbol, matching the expression syntax.
    pub fn symbol(self) -> &'static str {
        match self {
            TableOp::Plus => "+",
            TableOp::Odot => "&",
            TableOp::ImpArrow => "->",
            TableOp::ImpSquig => "~>",
            TableOp::ImpDouble => "=>",
            TableOp::Otimes => "*",
        }
    }

    pub fn from_cli_name(name: &str) -> Option<TableOp> {
        match name {
            "plus" => Some(TableOp::Plus),
            "odot" => Some(TableOp::Odot),
            "imp-arrow" => Some(TableOp::ImpArrow),
            "imp-squig" => Some(TableOp::ImpSquig),
            "imp-double" => Some(TableOp::ImpDouble),
            "otimes" => Some(TableOp::Otimes),
            _ => None,
        }
    }

    /// One cell, left operand `a`, right operand `b`.
    pub fn cell(self, ea: &EffectAlgebra, a: usize, b: usize) -> String {
        match self {
            TableOp::Plus => cell_label(ea, ea.plus(a, b)),
            TableOp::Odot => cell_label(ea, ea.odot(a, b)),
            TableOp::ImpSquig => cell_label(ea, ea.imp_squig(a, b)),
            TableOp::ImpArrow => set_label(ea, ea.imp_arrow(a, b)),
            TableOp::ImpDouble => set_label(ea, ea.imp_double(a, b)),
            TableOp::Otimes => set_label(ea, ea.otimes(a, b)),
        }
    }
}

/// Lays out a labelled grid: a corner label, column headers, and one
/// labelled row per line. Columns are padded to their own widths.
pub fn grid(corner: &str, columns: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows
        .iter()
        .map(|(l, _)| l.len())
        .chain([corner.len()])
        .max()
        .unwrap_or(0);
    let mut widths: Vec<usize> = columns.iter().map(|c| c.len()).collect();
    for (_, cells) in rows {
        for (i, cell) in cells.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = format!("{corner:<label_width$} |");
    for (c, w) in columns.iter().zip(&widths) {
        line.push_str(&format!(" {c:<w$}"));
    }
    out.push_str(line.trim_end());
    out.push('\n');
    let total: usize = widths.iter().map(|w| w + 1).sum();
    out.push_str(&format!(
        "{}-+{}\n",
        "-".repeat(label_width),
        "-".repeat(total)
    ));
    for (label, cells) in rows {
        let mut line = format!("{label:<label_width$} |");
        for (c, w) in cells.iter().zip(&widths) {
            line.push_str(&format!(" {c:<w$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The full operation table of a binary connective, rows and columns in
/// canonical element order.
pub fn operation_table(ea: &EffectAlgebra, op: TableOp) -> String {
    let columns: Vec<String> = ea.ids().to_vec();
    let rows: Vec<(String, Vec<String>)> = (0..ea.len())
        .map(|a| {
            (
                ea.id(a).to_string(),
                (0..ea.len()).map(|b| op.cell(ea, a, b)).collect(),
            )
        })
        .collect();
    grid(op.symbol(), &columns, &rows)
}

/// The cover relation of the induced order, one `x < y` per line.
pub fn cover_list(ea: &EffectAlgebra) -> String {
    let mut out = String::new();
    for (x, y) in ea.poset().covers() {
        out.push_str(&format!("{} < {}\n", ea.id(x), ea.id(y)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{nine_element, two_element};

    #[test]
    fn labels() {
        let ea = nine_element();
        assert_eq!(set_label(&ea, ElemSet::singleton(4)), "d");
        assert_eq!(set_label(&ea, ElemSet::from_iter([4, 7])), "{d,a'}");
        // Canonical order is declaration order, not alphabetical.
        assert_eq!(set_label(&ea, ElemSet::from_iter([7, 6])), "{b',a'}");
        assert_eq!(cell_label(&ea, None), "-");
        assert_eq!(
            prop_label(&ea, &Proposition::new(vec![7, 5, 7])),
            "(a',c',a')"
        );
    }

    #[test]
    fn grid_is_padded_and_trimmed() {
        let ea = two_element();
        let table = operation_table(&ea, TableOp::Plus);
        let expected = "\
+ | 0 1
--+----
0 | 0 1
1 | 1 -
";
        assert_eq!(table, expected);
        for line in table.lines() {
            assert_eq!(line, line.trim_end());
        }
    }

    #[test]
    fn nine_element_table_row_shape() {
        let ea = nine_element();
        let table = operation_table(&ea, TableOp::Otimes);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 11); // header + rule + 9 rows
        assert!(lines[0].starts_with("*"));
        assert!(lines[2].starts_with("0"));
    }

    #[test]
    fn covers_render() {
        let ea = two_element();
        assert_eq!(cover_list(&ea), "0 < 1\n");
    }
}
