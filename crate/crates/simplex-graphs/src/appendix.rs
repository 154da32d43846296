//! The bundled reference line tables for q = 4 and their parser.
//!
//! The tables are shipped as a data file transcribed by hand (see
//! `data/q4_tables.txt`) rather than regenerated, so that transcription
//! errors surface as verification failures instead of silent agreement.
//! Sections: `[SIX]`, `[X3]`, `[X0]` hold line matrices in the usual
//! `row|row|...` text form, `[X3]` entries carry a `; bold=s,t` suffix
//! marking the two rows avoiding all six lines, and `[PAIRS]` lists the
//! complementary triple pairs with their shared (s, t) row indices.

use std::path::Path;

use crate::field::FieldTable;
use crate::projective::GfVector;
use crate::{Error, Result};

/// Embedded copy of the canonical data file.
pub const EMBEDDED_TABLES: &str = include_str!("../data/q4_tables.txt");

/// One named line entry: five rows ordered by zero coordinate, plus the
/// bolded row indices (0-based) for `[X3]` entries.
#[derive(Clone, Debug)]
pub struct TableLine {
    pub name: String,
    pub rows: Vec<GfVector>,
    pub bold: Vec<usize>,
}

/// One `[PAIRS]` row: two complementary index triples into the six (1-based
/// labels, as printed) and the shared row indices (0-based).
#[derive(Clone, Copy, Debug)]
pub struct TriplePair {
    pub first: [usize; 3],
    pub second: [usize; 3],
    pub s: usize,
    pub t: usize,
}

/// The parsed reference tables.
#[derive(Clone, Debug)]
pub struct AppendixTable {
    pub six: Vec<TableLine>,
    pub x3: Vec<TableLine>,
    pub x0: Vec<TableLine>,
    pub pairs: Vec<TriplePair>,
}

impl AppendixTable {
    /// Parses the embedded copy of the tables.
    pub fn embedded(f: &FieldTable) -> Result<Self> {
        Self::parse(EMBEDDED_TABLES, f)
    }

    /// Reads and parses a tables file from disk.
    pub fn load(path: &Path, f: &FieldTable) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::parse(&text, f)
    }

    /// Parses a tables file; parse errors carry 1-based file line numbers.
    pub fn parse(text: &str, f: &FieldTable) -> Result<Self> {
        let mut six = Vec::new();
        let mut x3 = Vec::new();
        let mut x0 = Vec::new();
        let mut pairs = Vec::new();
        let mut section: Option<&str> = None;

        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(name) = line.strip_prefix('[') {
                let name = name.strip_suffix(']').ok_or_else(|| err(lineno, "unterminated section header"))?;
                section = Some(match name {
                    "SIX" => "SIX",
                    "X3" => "X3",
                    "X0" => "X0",
                    "PAIRS" => "PAIRS",
                    other => return Err(err(lineno, &format!("unknown section [{other}]"))),
                });
                continue;
            }
            match section {
                Some("SIX") => six.push(parse_line_entry(line, lineno, f, false)?),
                Some("X3") => x3.push(parse_line_entry(line, lineno, f, true)?),
                Some("X0") => x0.push(parse_line_entry(line, lineno, f, false)?),
                Some("PAIRS") => pairs.push(parse_pair_row(line, lineno)?),
                _ => return Err(err(lineno, "entry outside any section")),
            }
        }

        let table = AppendixTable { six, x3, x0, pairs };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let want = [
            ("[SIX] entries", 6, self.six.len()),
            ("[X3] entries", 20, self.x3.len()),
            ("[X0] entries", 20, self.x0.len()),
            ("[PAIRS] rows", 10, self.pairs.len()),
        ];
        for (what, expected, actual) in want {
            if expected != actual {
                return Err(Error::CountMismatch {
                    what: what.into(),
                    expected: expected as u64,
                    actual: actual as u64,
                });
            }
        }
        for (i, entry) in self.six.iter().enumerate() {
            let expect = format!("L_{}", i + 1);
            if entry.name != expect {
                return Err(err(0, &format!("[SIX] entry {} named {}, expected {expect}", i + 1, entry.name)));
            }
        }
        for entry in &self.x3 {
            if entry.bold.len() != 2 {
                return Err(err(0, &format!("{} must mark exactly two bold rows", entry.name)));
            }
            let triple = triple_of_name(&entry.name)
                .ok_or_else(|| err(0, &format!("bad [X3] name {}", entry.name)))?;
            if !(triple[0] < triple[1] && triple[1] < triple[2] && triple[2] <= 6 && triple[0] >= 1) {
                return Err(err(0, &format!("bad [X3] index triple in {}", entry.name)));
            }
        }
        for entry in &self.x0 {
            let Some(st) = st_of_name(&entry.name) else {
                return Err(err(0, &format!("bad [X0] name {}", entry.name)));
            };
            if st.0 == st.1 || st.0 < 1 || st.0 > 5 || st.1 < 1 || st.1 > 5 {
                return Err(err(0, &format!("bad [X0] row indices in {}", entry.name)));
            }
        }
        for p in &self.pairs {
            let mut all: Vec<usize> = p.first.iter().chain(p.second.iter()).copied().collect();
            all.sort_unstable();
            if all != vec![1, 2, 3, 4, 5, 6] {
                return Err(err(0, "[PAIRS] triples must partition 1..6"));
            }
            if p.s >= 5 || p.t >= 5 || p.s == p.t {
                return Err(err(0, "[PAIRS] row indices must be distinct and in 1..5"));
            }
        }
        Ok(())
    }

    pub fn x3_by_name(&self, name: &str) -> Option<&TableLine> {
        self.x3.iter().find(|e| e.name == name)
    }

    pub fn x0_by_name(&self, name: &str) -> Option<&TableLine> {
        self.x0.iter().find(|e| e.name == name)
    }
}

/// The i, j, k of an `L_ijk` name (1-based).
pub fn triple_of_name(name: &str) -> Option<[usize; 3]> {
    let digits = name.strip_prefix("L_")?;
    if digits.len() != 3 {
        return None;
    }
    let d: Vec<usize> = digits
        .chars()
        .map(|c| c.to_digit(10).map(|x| x as usize))
        .collect::<Option<_>>()?;
    Some([d[0], d[1], d[2]])
}

/// The s, t of an `L_st` name (1-based).
pub fn st_of_name(name: &str) -> Option<(usize, usize)> {
    let digits = name.strip_prefix("L_")?;
    if digits.len() != 2 {
        return None;
    }
    let d: Vec<usize> = digits
        .chars()
        .map(|c| c.to_digit(10).map(|x| x as usize))
        .collect::<Option<_>>()?;
    Some((d[0], d[1]))
}

fn err(line: usize, msg: &str) -> Error {
    Error::Parse {
        line,
        msg: msg.to_string(),
    }
}

fn parse_line_entry(line: &str, lineno: usize, f: &FieldTable, bold_required: bool) -> Result<TableLine> {
    let (name, rest) = line
        .split_once(':')
        .ok_or_else(|| err(lineno, "expected `NAME: rows`"))?;
    let (matrix, bold) = match rest.split_once(';') {
        Some((m, b)) => (m.trim(), Some(b.trim())),
        None => (rest.trim(), None),
    };
    if bold_required && bold.is_none() {
        return Err(err(lineno, "missing `; bold=s,t` marks"));
    }
    if !bold_required && bold.is_some() {
        return Err(err(lineno, "unexpected bold marks"));
    }

    let mut rows = Vec::new();
    for (i, row) in matrix.split('|').enumerate() {
        let v = GfVector::parse(row.trim(), f).map_err(|e| match e {
            Error::Parse { msg, .. } => err(lineno, &msg),
            other => other,
        })?;
        if v.len() != 5 {
            return Err(err(lineno, &format!("row {} has {} symbols, expected 5", i + 1, v.len())));
        }
        // layout convention: row i has its zero exactly in coordinate i
        if v.zero_support() != vec![i] {
            return Err(err(lineno, &format!("row {} must have its only zero in position {}", i + 1, i + 1)));
        }
        rows.push(v);
    }
    if rows.len() != 5 {
        return Err(err(lineno, &format!("{} rows, expected 5", rows.len())));
    }

    let bold = match bold {
        None => Vec::new(),
        Some(marks) => {
            let marks = marks
                .strip_prefix("bold=")
                .ok_or_else(|| err(lineno, "expected `bold=s,t`"))?;
            let mut out = Vec::new();
            for part in marks.split(',') {
                let idx: usize = part
                    .trim()
                    .parse()
                    .map_err(|_| err(lineno, "bold indices must be integers"))?;
                if !(1..=5).contains(&idx) {
                    return Err(err(lineno, "bold indices must be in 1..5"));
                }
                out.push(idx - 1);
            }
            out.sort_unstable();
            out.dedup();
            out
        }
    };

    Ok(TableLine {
        name: name.trim().to_string(),
        rows,
        bold,
    })
}

fn parse_pair_row(line: &str, lineno: usize) -> Result<TriplePair> {
    let cols: Vec<&str> = line.split('|').map(str::trim).collect();
    if cols.len() != 3 {
        return Err(err(lineno, "expected `i,j,k | i',j',k' | s,t`"));
    }
    let nums = |s: &str, want: usize| -> Result<Vec<usize>> {
        let ns: Vec<usize> = s
            .split(',')
            .map(|x| x.trim().parse().map_err(|_| err(lineno, "indices must be integers")))
            .collect::<Result<_>>()?;
        if ns.len() != want {
            return Err(err(lineno, &format!("expected {want} indices, got {}", ns.len())));
        }
        Ok(ns)
    };
    let first = nums(cols[0], 3)?;
    let second = nums(cols[1], 3)?;
    let st = nums(cols[2], 2)?;
    if st[0] < 1 || st[0] > 5 || st[1] < 1 || st[1] > 5 {
        return Err(err(lineno, "row indices must be in 1..5"));
    }
    Ok(TriplePair {
        first: [first[0], first[1], first[2]],
        second: [second[0], second[1], second[2]],
        s: st[0] - 1,
        t: st[1] - 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> FieldTable {
        FieldTable::new(2, 2).unwrap()
    }

    #[test]
    fn embedded_tables_parse() {
        let t = AppendixTable::embedded(&gf4()).unwrap();
        assert_eq!(t.six.len(), 6);
        assert_eq!(t.x3.len(), 20);
        assert_eq!(t.x0.len(), 20);
        assert_eq!(t.pairs.len(), 10);
        for entry in &t.x3 {
            assert_eq!(entry.bold.len(), 2);
        }
        let l136 = t.x3_by_name("L_136").unwrap();
        assert_eq!(l136.bold, vec![3, 4]);
        assert_eq!(l136.rows[0].text(&gf4()), "011aa");
        assert_eq!(t.pairs[0].first, [1, 3, 6]);
        assert_eq!(t.pairs[0].second, [2, 4, 5]);
        assert_eq!((t.pairs[0].s, t.pairs[0].t), (3, 4));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let f = gf4();
        // bad symbol
        let text = "[SIX]\nL_1: 011ax|10aa1|1a01a|11b0b|1b1b0\n";
        match AppendixTable::parse(text, &f) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        // wrong zero position
        let text = "[X0]\nL_12: 101bb|01ab1|1b01b|1110a|1aba0\n";
        assert!(matches!(
            AppendixTable::parse(text, &f),
            Err(Error::Parse { line: 2, .. })
        ));
        // missing bold marks in X3
        let text = "[X3]\nL_123: 01bbb|10b1a|110a1|1aa0b|1b1b0\n";
        assert!(matches!(
            AppendixTable::parse(text, &f),
            Err(Error::Parse { line: 2, .. })
        ));
        // entry before any section
        assert!(AppendixTable::parse("L_1: 011aa\n", &f).is_err());
        // truncated file fails the count validation
        let text = "[SIX]\nL_1: 011aa|10aa1|1a01a|11b0b|1b1b0\n";
        assert!(matches!(
            AppendixTable::parse(text, &f),
            Err(Error::CountMismatch { .. })
        ));
    }

    #[test]
    fn name_helpers() {
        assert_eq!(triple_of_name("L_136"), Some([1, 3, 6]));
        assert_eq!(triple_of_name("L_36"), None);
        assert_eq!(st_of_name("L_45"), Some((4, 5)));
        assert_eq!(st_of_name("L_456"), None);
    }
}
