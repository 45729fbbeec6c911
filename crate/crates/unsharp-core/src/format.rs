//! The line-oriented text formats: algebras, time frames, propositions,
//! and operator tables.
//!
//! Files are UTF-8, `#` starts a comment, blank lines are ignored.
//! A section header is `[name ...]`; payload tokens may follow the
//! header on the same line or on the lines below it. Element and time
//! ids are arbitrary tokens without whitespace or the reserved
//! characters `[ ] { } , : # ( ) & * + = ~ > < |`, and may not be the
//! literals `-` or `->` (the undefined-cell and arrow markers).
//!
//! ```text
//! [elements] 0 x 1        [times] 1 2          [prop p] x 1
//! [zero] 0                [rel]                [op H *]
//! [one] 1                 1 1                  1 -> {0}
//! [plus]                  1 2                  2 -> 0
//! 0: 0 x 1                2 2
//! x: x 1 -
//! 1: 1 - -
//! [supplement]
//! x x
//! ```

use crate::algebra::{AxiomViolation, EffectAlgebra, RawAlgebra};
use crate::induction::{ExtendedFrame, OpValues, OperatorTable, TableError};
use crate::poset::ElemSet;
use crate::tense::{Proposition, TenseError, TenseOp, TimeFrame};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("line {line}, column {col}: unknown id `{id}`")]
    UnknownId { line: usize, col: usize, id: String },
    #[error("line {line}: table row for `{row}` has {given} cells, expected {expected}")]
    NotSquare {
        line: usize,
        row: String,
        given: usize,
        expected: usize,
    },
    #[error("missing section [{0}]")]
    MissingSection(String),
    #[error("line {line}: duplicate {what}")]
    Duplicate { line: usize, what: String },
}

/// Errors from loading and validating an algebra file in one step.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraLoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("invalid effect algebra: {0}")]
    Axioms(#[from] AxiomViolation),
}

/// Errors from loading an operator-table file.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OpsLoadError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("inconsistent operator table: {0}")]
    Table(#[from] TableError),
    #[error("bad time set: {0}")]
    Times(#[from] TenseError),
}

const RESERVED: &str = "[]{},:#()&*+=~><|";

fn valid_id(tok: &str) -> bool {
    !tok.is_empty()
        && tok != "-"
        && tok != "->"
        && tok
            .chars()
            .all(|c| !c.is_whitespace() && !RESERVED.contains(c))
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone)]
struct Section {
    name: String,
    args: Vec<Token>,
    line: usize,
    /// Payload tokens grouped per physical line (header line included).
    rows: Vec<Vec<Token>>,
}

fn tokenize_line(line: &str, line_no: usize) -> Vec<Token> {
    let without_comment = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut col = 0;
    let chars: Vec<char> = without_comment.chars().collect();
    while col < chars.len() {
        if chars[col].is_whitespace() {
            col += 1;
            continue;
        }
        let start = col;
        while col < chars.len() && !chars[col].is_whitespace() {
            col += 1;
        }
        out.push(Token {
            text: chars[start..col].iter().collect(),
            line: line_no,
            col: start + 1,
        });
    }
    out
}

fn split_sections(text: &str) -> Result<Vec<Section>, FormatError> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let tokens = tokenize_line(raw, line_no);
        if tokens.is_empty() {
            continue;
        }
        if tokens[0].text.starts_with('[') {
            // Collect header tokens until one ends with ']'.
            let mut header: Vec<Token> = Vec::new();
            let mut rest_start = None;
            for (k, t) in tokens.iter().enumerate() {
                let mut text = t.text.clone();
                let mut done = false;
                if k == 0 {
                    text = text[1..].to_string();
                }
                if text.ends_with(']') {
                    text.pop();
                    done = true;
                }
                if !text.is_empty() {
                    header.push(Token {
                        text,
                        line: t.line,
                        col: t.col,
                    });
                }
                if done {
                    rest_start = Some(k + 1);
                    break;
                }
            }
            let Some(rest_start) = rest_start else {
                return Err(FormatError::Syntax {
                    line: line_no,
                    col: tokens[0].col,
                    msg: "unterminated section header".into(),
                });
            };
            if header.is_empty() {
                return Err(FormatError::Syntax {
                    line: line_no,
                    col: tokens[0].col,
                    msg: "empty section header".into(),
                });
            }
            let name = header[0].text.clone();
            let args = header[1..].to_vec();
            let inline: Vec<Token> = tokens[rest_start..].to_vec();
            let rows = if inline.is_empty() {
                Vec::new()
            } else {
                vec![inline]
            };
            sections.push(Section {
                name,
                args,
                line: line_no,
                rows,
            });
        } else {
            let Some(section) = sections.last_mut() else {
                return Err(FormatError::Syntax {
                    line: line_no,
                    col: tokens[0].col,
                    msg: "content before the first section header".into(),
                });
            };
            section.rows.push(tokens);
        }
    }
    Ok(sections)
}

fn flat_tokens(section: &Section) -> Vec<Token> {
    section.rows.iter().flatten().cloned().collect()
}

fn single_token(section: &Section) -> Result<Token, FormatError> {
    let all = flat_tokens(section);
    if all.len() != 1 {
        return Err(FormatError::Syntax {
            line: section.line,
            col: 1,
            msg: format!("section [{}] expects exactly one token", section.name),
        });
    }
    Ok(all[0].clone())
}

fn check_id(tok: &Token) -> Result<(), FormatError> {
    if !valid_id(&tok.text) {
        return Err(FormatError::Syntax {
            line: tok.line,
            col: tok.col,
            msg: format!("`{}` is not a legal id", tok.text),
        });
    }
    Ok(())
}

fn resolve(ids: &[String], tok: &Token) -> Result<usize, FormatError> {
    ids.iter()
        .position(|x| *x == tok.text)
        .ok_or_else(|| FormatError::UnknownId {
            line: tok.line,
            col: tok.col,
            id: tok.text.clone(),
        })
}

/// Parses an algebra file into its unchecked table.
pub fn parse_algebra(text: &str) -> Result<RawAlgebra, FormatError> {
    let sections = split_sections(text)?;
    let mut elements: Option<&Section> = None;
    let mut zero = None;
    let mut one = None;
    let mut plus = None;
    let mut supplement = None;
    for s in &sections {
        let slot = match s.name.as_str() {
            "elements" => &mut elements,
            "zero" => &mut zero,
            "one" => &mut one,
            "plus" => &mut plus,
            "supplement" => &mut supplement,
            other => {
                return Err(FormatError::Syntax {
                    line: s.line,
                    col: 1,
                    msg: format!("unknown section [{other}] in an algebra file"),
                })
            }
        };
        if slot.is_some() {
            return Err(FormatError::Duplicate {
                line: s.line,
                what: format!("section [{}]", s.name),
            });
        }
        *slot = Some(s);
    }
    let elements = elements.ok_or_else(|| FormatError::MissingSection("elements".into()))?;
    let zero = zero.ok_or_else(|| FormatError::MissingSection("zero".into()))?;
    let one = one.ok_or_else(|| FormatError::MissingSection("one".into()))?;
    let plus = plus.ok_or_else(|| FormatError::MissingSection("plus".into()))?;

    let mut ids: Vec<String> = Vec::new();
    for tok in flat_tokens(elements) {
        check_id(&tok)?;
        if ids.contains(&tok.text) {
            return Err(FormatError::Duplicate {
                line: tok.line,
                what: format!("element `{}`", tok.text),
            });
        }
        ids.push(tok.text);
    }
    if ids.is_empty() {
        return Err(FormatError::Syntax {
            line: elements.line,
            col: 1,
            msg: "section [elements] is empty".into(),
        });
    }
    let n = ids.len();
    let zero = resolve(&ids, &single_token(zero)?)?;
    let one = resolve(&ids, &single_token(one)?)?;

    if plus.rows.is_empty() {
        return Err(FormatError::Syntax {
            line: plus.line,
            col: 1,
            msg: "section [plus] is empty".into(),
        });
    }
    let mut table: Vec<Option<Vec<Option<usize>>>> = vec![None; n];
    for row in &plus.rows {
        // Row label may carry the colon attached or as its own token.
        let (label, cells) = if let Some(stripped) = row[0].text.strip_suffix(':') {
            (
                Token {
                    text: stripped.to_string(),
                    ..row[0].clone()
                },
                &row[1..],
            )
        } else if row.len() > 1 && row[1].text == ":" {
            (row[0].clone(), &row[2..])
        } else {
            return Err(FormatError::Syntax {
                line: row[0].line,
                col: row[0].col,
                msg: "table row must start with `<element>:`".into(),
            });
        };
        check_id(&label)?;
        let r = resolve(&ids, &label)?;
        if table[r].is_some() {
            return Err(FormatError::Duplicate {
                line: label.line,
                what: format!("row `{}`", label.text),
            });
        }
        if cells.len() != n {
            return Err(FormatError::NotSquare {
                line: label.line,
                row: label.text,
                given: cells.len(),
                expected: n,
            });
        }
        let mut parsed = Vec::with_capacity(n);
        for cell in cells {
            parsed.push(if cell.text == "-" {
                None
            } else {
                Some(resolve(&ids, cell)?)
            });
        }
        table[r] = Some(parsed);
    }
    let mut rows = Vec::with_capacity(n);
    for (r, row) in table.into_iter().enumerate() {
        match row {
            Some(v) => rows.push(v),
            None => {
                return Err(FormatError::NotSquare {
                    line: plus.line,
                    row: ids[r].clone(),
                    given: 0,
                    expected: n,
                })
            }
        }
    }

    let declared_supplement = match supplement {
        None => None,
        Some(s) => {
            let mut map: Vec<Option<usize>> = vec![None; n];
            for row in &s.rows {
                if row.len() != 2 {
                    return Err(FormatError::Syntax {
                        line: row[0].line,
                        col: row[0].col,
                        msg: "supplement rows are `<element> <element>` pairs".into(),
                    });
                }
                let x = resolve(&ids, &row[0])?;
                if map[x].is_some() {
                    return Err(FormatError::Duplicate {
                        line: row[0].line,
                        what: format!("supplement for `{}`", row[0].text),
                    });
                }
                map[x] = Some(resolve(&ids, &row[1])?);
            }
            for (x, v) in map.iter().enumerate() {
                if v.is_none() {
                    return Err(FormatError::Syntax {
                        line: s.line,
                        col: 1,
                        msg: format!("supplement section misses element `{}`", ids[x]),
                    });
                }
            }
            Some(map.into_iter().map(|v| v.unwrap()).collect())
        }
    };
    Ok(RawAlgebra {
        ids,
        plus: rows,
        zero,
        one,
        declared_supplement,
    })
}

/// Parses and validates an algebra file.
pub fn load_algebra(text: &str) -> Result<EffectAlgebra, AlgebraLoadError> {
    Ok(parse_algebra(text)?.validate()?)
}

/// Parses a time-frame file.
pub fn parse_frame(text: &str) -> Result<TimeFrame, FormatError> {
    let sections = split_sections(text)?;
    let mut times: Option<&Section> = None;
    let mut rel: Option<&Section> = None;
    for s in &sections {
        let slot = match s.name.as_str() {
            "times" => &mut times,
            "rel" => &mut rel,
            other => {
                return Err(FormatError::Syntax {
                    line: s.line,
                    col: 1,
                    msg: format!("unknown section [{other}] in a frame file"),
                })
            }
        };
        if slot.is_some() {
            return Err(FormatError::Duplicate {
                line: s.line,
                what: format!("section [{}]", s.name),
            });
        }
        *slot = Some(s);
    }
    let times = times.ok_or_else(|| FormatError::MissingSection("times".into()))?;
    let rel = rel.ok_or_else(|| FormatError::MissingSection("rel".into()))?;
    let mut time_ids: Vec<String> = Vec::new();
    for tok in flat_tokens(times) {
        check_id(&tok)?;
        if time_ids.contains(&tok.text) {
            return Err(FormatError::Duplicate {
                line: tok.line,
                what: format!("time `{}`", tok.text),
            });
        }
        time_ids.push(tok.text);
    }
    let mut pairs = Vec::new();
    for row in &rel.rows {
        if row.len() != 2 {
            return Err(FormatError::Syntax {
                line: row[0].line,
                col: row[0].col,
                msg: "relation rows are `<time> <time>` pairs".into(),
            });
        }
        pairs.push((resolve(&time_ids, &row[0])?, resolve(&time_ids, &row[1])?));
    }
    TimeFrame::new(time_ids, &pairs).map_err(|e| FormatError::Syntax {
        line: rel.line,
        col: 1,
        msg: e.to_string(),
    })
}

/// Parses a propositions file against an algebra and a time set.
/// Returns the named propositions in declaration order.
pub fn parse_props(
    text: &str,
    ea: &EffectAlgebra,
    times: &[String],
) -> Result<Vec<(String, Proposition)>, FormatError> {
    let sections = split_sections(text)?;
    let mut out: Vec<(String, Proposition)> = Vec::new();
    for s in &sections {
        if s.name != "prop" {
            return Err(FormatError::Syntax {
                line: s.line,
                col: 1,
                msg: format!("unknown section [{}] in a propositions file", s.name),
            });
        }
        if s.args.len() != 1 {
            return Err(FormatError::Syntax {
                line: s.line,
                col: 1,
                msg: "section header is [prop <name>]".into(),
            });
        }
        let name = &s.args[0];
        check_id(name)?;
        if out.iter().any(|(n, _)| *n == name.text) {
            return Err(FormatError::Duplicate {
                line: s.line,
                what: format!("proposition `{}`", name.text),
            });
        }
        let cells = flat_tokens(s);
        if cells.len() != times.len() {
            return Err(FormatError::Syntax {
                line: s.line,
                col: 1,
                msg: format!(
                    "proposition `{}` has {} values, the time set has {}",
                    name.text,
                    cells.len(),
                    times.len()
                ),
            });
        }
        let mut values = Vec::with_capacity(times.len());
        for cell in &cells {
            values.push(resolve(ea.ids(), cell)?);
        }
        out.push((name.text.clone(), Proposition::new(values)));
    }
    Ok(out)
}

/// Parses a `{a,b}` or bare-element set token.
fn parse_set(ea: &EffectAlgebra, tok: &Token) -> Result<ElemSet, FormatError> {
    let text = tok.text.as_str();
    if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let mut set = ElemSet::EMPTY;
        for part in inner.split(',') {
            if part.is_empty() {
                continue;
            }
            set.insert(resolve(
                ea.ids(),
                &Token {
                    text: part.to_string(),
                    line: tok.line,
                    col: tok.col,
                },
            )?);
        }
        if set.is_empty() {
            return Err(FormatError::Syntax {
                line: tok.line,
                col: tok.col,
                msg: "operator values must be nonempty sets".into(),
            });
        }
        Ok(set)
    } else {
        Ok(ElemSet::singleton(resolve(ea.ids(), tok)?))
    }
}

/// Parses an operator-table file: a time set, optional named
/// propositions, and one `[op X <prop>|*]` section per operator with
/// `time -> value` rows. Wildcard sections define the operator for
/// every proposition at once.
pub fn parse_ops(text: &str, ea: &EffectAlgebra) -> Result<OperatorTable, OpsLoadError> {
    let sections = split_sections(text)?;
    let mut time_ids: Vec<String> = Vec::new();
    let mut props: Vec<(String, Proposition)> = Vec::new();
    struct OpSection {
        op: TenseOp,
        target: Option<String>,
        line: usize,
        rows: Vec<Vec<Token>>,
    }
    let mut op_sections: Vec<OpSection> = Vec::new();

    for s in &sections {
        match s.name.as_str() {
            "times" => {
                for tok in flat_tokens(s) {
                    check_id(&tok)?;
                    if time_ids.contains(&tok.text) {
                        return Err(FormatError::Duplicate {
                            line: tok.line,
                            what: format!("time `{}`", tok.text),
                        }
                        .into());
                    }
                    time_ids.push(tok.text);
                }
            }
            "prop" => {
                if s.args.len() != 1 {
                    return Err(FormatError::Syntax {
                        line: s.line,
                        col: 1,
                        msg: "section header is [prop <name>]".into(),
                    }
                    .into());
                }
                let name = s.args[0].text.clone();
                let cells = flat_tokens(s);
                if cells.len() != time_ids.len() {
                    return Err(FormatError::Syntax {
                        line: s.line,
                        col: 1,
                        msg: format!("proposition `{name}` must list one value per time point"),
                    }
                    .into());
                }
                let mut values = Vec::new();
                for cell in &cells {
                    values.push(resolve(ea.ids(), cell)?);
                }
                if props.iter().any(|(n, _)| *n == name) {
                    return Err(FormatError::Duplicate {
                        line: s.line,
                        what: format!("proposition `{name}`"),
                    }
                    .into());
                }
                props.push((name, Proposition::new(values)));
            }
            "op" => {
                if s.args.len() != 2 {
                    return Err(FormatError::Syntax {
                        line: s.line,
                        col: 1,
                        msg: "section header is [op <P|F|H|G> <prop>|*]".into(),
                    }
                    .into());
                }
                let Some(op) = TenseOp::from_name(&s.args[0].text) else {
                    return Err(FormatError::Syntax {
                        line: s.args[0].line,
                        col: s.args[0].col,
                        msg: format!("unknown operator `{}`", s.args[0].text),
                    }
                    .into());
                };
                let target = if s.args[1].text == "*" {
                    None
                } else {
                    Some(s.args[1].text.clone())
                };
                op_sections.push(OpSection {
                    op,
                    target,
                    line: s.line,
                    rows: s.rows.clone(),
                });
            }
            other => {
                return Err(FormatError::Syntax {
                    line: s.line,
                    col: 1,
                    msg: format!("unknown section [{other}] in an operator file"),
                }
                .into())
            }
        }
    }
    if time_ids.is_empty() {
        return Err(FormatError::MissingSection("times".into()).into());
    }

    // One `time -> value` row per time point per section.
    let parse_rows = |rows: &[Vec<Token>], line: usize| -> Result<Vec<ElemSet>, OpsLoadError> {
        let mut values: Vec<Option<ElemSet>> = vec![None; time_ids.len()];
        for row in rows {
            if row.len() != 3 || row[1].text != "->" {
                return Err(FormatError::Syntax {
                    line: row[0].line,
                    col: row[0].col,
                    msg: "operator rows are `<time> -> <value>`".into(),
                }
                .into());
            }
            let t = resolve(&time_ids, &row[0])?;
            if values[t].is_some() {
                return Err(FormatError::Duplicate {
                    line: row[0].line,
                    what: format!("value at time `{}`", row[0].text),
                }
                .into());
            }
            values[t] = Some(parse_set(ea, &row[2])?);
        }
        values
            .into_iter()
            .enumerate()
            .map(|(t, v)| {
                v.ok_or_else(|| {
                    FormatError::Syntax {
                        line,
                        col: 1,
                        msg: format!("missing value at time `{}`", time_ids[t]),
                    }
                    .into()
                })
            })
            .collect()
    };

    let mut per_op: [Option<OpValues>; 4] = [None, None, None, None];
    let slot_of = |op: TenseOp| match op {
        TenseOp::P => 0,
        TenseOp::F => 1,
        TenseOp::H => 2,
        TenseOp::G => 3,
    };
    for section in &op_sections {
        let slot = slot_of(section.op);
        match &section.target {
            None => {
                if per_op[slot].is_some() {
                    return Err(FormatError::Duplicate {
                        line: section.line,
                        what: format!("definition of operator {}", section.op.name()),
                    }
                    .into());
                }
                per_op[slot] = Some(OpValues::Constant(parse_rows(&section.rows, section.line)?));
            }
            Some(name) => {
                let Some((_, prop)) = props.iter().find(|(n, _)| n == name) else {
                    return Err(FormatError::Syntax {
                        line: section.line,
                        col: 1,
                        msg: format!("operator section refers to undeclared proposition `{name}`"),
                    }
                    .into());
                };
                let row = parse_rows(&section.rows, section.line)?;
                match per_op[slot].get_or_insert_with(|| OpValues::Table(HashMap::new())) {
                    OpValues::Table(map) => {
                        if map.insert(prop.clone(), row).is_some() {
                            return Err(FormatError::Duplicate {
                                line: section.line,
                                what: format!(
                                    "operator {} on proposition `{name}`",
                                    section.op.name()
                                ),
                            }
                            .into());
                        }
                    }
                    OpValues::Constant(_) => {
                        return Err(FormatError::Syntax {
                            line: section.line,
                            col: 1,
                            msg: format!(
                                "operator {} mixes wildcard and named sections",
                                section.op.name()
                            ),
                        }
                        .into())
                    }
                }
            }
        }
    }
    let mut values = Vec::with_capacity(4);
    for (slot, name) in ["P", "F", "H", "G"].iter().enumerate() {
        match per_op[slot].take() {
            Some(v) => values.push(v),
            None => return Err(FormatError::MissingSection(format!("op {name}")).into()),
        }
    }
    let values: [OpValues; 4] = values.try_into().expect("four operators");
    Ok(OperatorTable::given(time_ids, ea.len(), values, 100_000)?)
}

/// Content sniffing for the CLI: operator files contain `[op ...]`
/// sections, frame files a `[rel]` section.
pub fn looks_like_ops(text: &str) -> bool {
    split_sections(text)
        .map(|s| s.iter().any(|sec| sec.name == "op"))
        .unwrap_or(false)
}

/// Normalized algebra serialization; parsing it back yields the same
/// structure and serializing again is byte-identical.
pub fn serialize_algebra(ea: &EffectAlgebra) -> String {
    let n = ea.len();
    let width = ea.ids().iter().map(|s| s.len()).max().unwrap_or(1);
    let mut out = String::new();
    out.push_str("[elements]\n");
    out.push_str(&ea.ids().join(" "));
    out.push('\n');
    out.push_str(&format!("[zero] {}\n", ea.id(ea.zero())));
    out.push_str(&format!("[one] {}\n", ea.id(ea.one())));
    out.push_str("[plus]\n");
    for a in 0..n {
        let mut line = format!("{:<w$}:", ea.id(a), w = width);
        for b in 0..n {
            let cell = match ea.plus(a, b) {
                Some(v) => ea.id(v),
                None => "-",
            };
            line.push_str(&format!(" {cell:<width$}"));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out.push_str("[supplement]\n");
    for a in 0..n {
        out.push_str(&format!("{} {}\n", ea.id(a), ea.id(ea.supplement(a))));
    }
    out
}

/// Frame serialization in the same shape the parser accepts.
pub fn serialize_frame(frame: &TimeFrame) -> String {
    let mut out = String::new();
    out.push_str("[times]\n");
    out.push_str(&frame.times().join(" "));
    out.push('\n');
    out.push_str("[rel]\n");
    for (s, t) in frame.pairs() {
        out.push_str(&format!("{} {}\n", frame.time_id(s), frame.time_id(t)));
    }
    out
}

/// Extended-frame serialization (same frame-file shape; past and future
/// copies carry `.1` / `.2` suffixes).
pub fn serialize_extended_frame(ext: &ExtendedFrame) -> String {
    let mut out = String::new();
    out.push_str("[times]\n");
    out.push_str(&ext.times.join(" "));
    out.push('\n');
    out.push_str("[rel]\n");
    for &(s, t) in &ext.rel {
        out.push_str(&format!("{} {}\n", ext.times[s], ext.times[t]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::nine_element_raw;

    pub const NINE: &str = "\
# Nine-element non-lattice effect algebra.
[elements]
0 a b c d c' b' a' 1
[zero] 0
[one] 1
[plus]
0:  0  a  b  c  d  c' b' a' 1
a:  a  -  c' b' -  -  -  1  -
b:  b  c' d  a' b' -  1  -  -
c:  c  b' a' -  -  1  -  -  -
d:  d  -  b' -  1  -  -  -  -
c': c' -  -  1  -  -  -  -  -
b': b' -  1  -  -  -  -  -  -
a': a' 1  -  -  -  -  -  -  -
1:  1  -  -  -  -  -  -  -  -
[supplement]
0 1
a a'
b b'
c c'
d d
c' c
b' b
a' a
1 0
";

    #[test]
    fn parses_the_nine_element_file() {
        let raw = parse_algebra(NINE).unwrap();
        let reference = nine_element_raw();
        assert_eq!(raw.ids, reference.ids);
        assert_eq!(raw.plus, reference.plus);
        assert_eq!(
            raw.declared_supplement,
            Some(vec![8, 7, 6, 5, 4, 3, 2, 1, 0])
        );
        assert!(raw.validate().is_ok());
    }

    #[test]
    fn empty_plus_section_is_a_syntax_error() {
        let text = "[elements] 0 1\n[zero] 0\n[one] 1\n[plus]\n";
        match parse_algebra(text) {
            Err(FormatError::Syntax { line: 4, msg, .. }) => {
                assert!(msg.contains("[plus]"), "{msg}");
            }
            other => panic!("expected a syntax error, got {other:?}"),
        }
    }

    #[test]
    fn ragged_row_is_rejected() {
        let text = "[elements] 0 1\n[zero] 0\n[one] 1\n[plus]\n0: 0 1\n1: 1\n";
        assert_eq!(
            parse_algebra(text).unwrap_err(),
            FormatError::NotSquare {
                line: 6,
                row: "1".into(),
                given: 1,
                expected: 2
            }
        );
    }

    #[test]
    fn unknown_cell_id_is_rejected() {
        let text = "[elements] 0 1\n[zero] 0\n[one] 1\n[plus]\n0: 0 1\n1: 1 q\n";
        assert_eq!(
            parse_algebra(text).unwrap_err(),
            FormatError::UnknownId {
                line: 6,
                col: 6,
                id: "q".into()
            }
        );
    }

    #[test]
    fn bad_supplement_is_caught_by_validation() {
        let mut text = NINE.replace("d d\n", "d 0\n");
        text.push('\n');
        match load_algebra(&text) {
            Err(AlgebraLoadError::Axioms(AxiomViolation::SupplementMismatch { a, .. })) => {
                assert_eq!(a, "d");
            }
            other => panic!("expected a supplement mismatch, got {other:?}"),
        }
    }

    #[test]
    fn reserved_ids_are_rejected() {
        for bad in ["x:y", "a,b", "{a}", "-", "->", "p*q"] {
            let text = format!("[elements] 0 {bad} 1\n[zero] 0\n[one] 1\n[plus]\n");
            assert!(
                matches!(parse_algebra(&text), Err(FormatError::Syntax { .. })),
                "{bad} should be rejected"
            );
        }
    }

    #[test]
    fn frame_and_props_round_trip() {
        let ea = load_algebra(NINE).unwrap();
        let frame_text = "[times] 1 2 3\n[rel]\n1 1\n1 2\n1 3\n2 2\n2 3\n3 3\n";
        let frame = parse_frame(frame_text).unwrap();
        assert!(frame.is_serial());
        assert_eq!(
            serialize_frame(&frame),
            "[times]\n1 2 3\n[rel]\n1 1\n1 2\n1 3\n2 2\n2 3\n3 3\n"
        );
        let props =
            parse_props("[prop p] a' c' a'\n[prop q] b' b' c'\n", &ea, frame.times()).unwrap();
        assert_eq!(props.len(), 2);
        assert_eq!(props[0].0, "p");
        assert_eq!(props[0].1.values(), &[7, 5, 7]);

        let short = parse_props("[prop p] a'\n", &ea, frame.times());
        assert!(matches!(short, Err(FormatError::Syntax { .. })));
    }

    #[test]
    fn algebra_serialization_is_idempotent() {
        let ea = load_algebra(NINE).unwrap();
        let once = serialize_algebra(&ea);
        let twice = serialize_algebra(&load_algebra(&once).unwrap());
        assert_eq!(once, twice);
    }

    #[test]
    fn serialization_round_trips_on_generated_algebras() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let ea = crate::gen::random_effect_algebra(&mut rng, 8);
            let text = serialize_algebra(&ea);
            let back = load_algebra(&text).expect("serialized algebra reloads");
            assert_eq!(back.ids(), ea.ids());
            assert_eq!(serialize_algebra(&back), text);
        }
    }

    #[test]
    fn wildcard_ops_file() {
        let ea = load_algebra(NINE).unwrap();
        let text = "\
[times] 1 2 3
[op P *]
1 -> {1}
2 -> {1}
3 -> {1}
[op F *]
1 -> 1
2 -> 1
3 -> 1
[op H *]
1 -> {0}
2 -> {0}
3 -> {0}
[op G *]
1 -> 0
2 -> 0
3 -> 0
";
        let table = parse_ops(text, &ea).unwrap();
        assert!(looks_like_ops(text));
        assert!(!looks_like_ops(NINE));
        let p = Proposition::new(vec![1, 2, 3]);
        assert_eq!(table.eval(&ea, TenseOp::P, &p, 0), ElemSet::singleton(8));
        assert_eq!(table.eval(&ea, TenseOp::G, &p, 2), ElemSet::singleton(0));
    }

    #[test]
    fn named_ops_require_totality() {
        let ea =
            load_algebra("[elements] 0 1\n[zero] 0\n[one] 1\n[plus]\n0: 0 1\n1: 1 -\n").unwrap();
        let text = "\
[times] t
[prop p] 0
[op P p]
t -> 1
[op F *]
t -> 1
[op H *]
t -> 0
[op G *]
t -> 0
";
        match parse_ops(text, &ea) {
            Err(OpsLoadError::Table(TableError::WrongPropositionCount {
                op: "P",
                given: 1,
                expected: 2,
            })) => {}
            other => panic!("expected totality failure, got {other:?}"),
        }
    }
}
