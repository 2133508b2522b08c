//! Regression corpus of ideals with known classes.
//!
//! One entry per line, `#` starts a comment:
//!
//! ```text
//! name ; ideal ; expected_class ; [p,q,r,mu0,mu1]
//! ```
//!
//! The bracketed values may be omitted.

use serde::Serialize;

use crate::classify::{classify, InvariantReport, KoszulClass};
use crate::config::Config;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// The corpus shipped with the crate.
pub const SHIPPED_CORPUS: &str = include_str!("../data/corpus.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub ideal_text: String,
    pub ideal: MonomialIdeal,
    pub expected: KoszulClass,
    /// `[p, q, r, μ⁰, μ¹]`.
    pub values: Option<[usize; 5]>,
    pub line: usize,
}

fn parse_values(text: &str, line: usize) -> Result<[usize; 5]> {
    let err = |message: String| Error::Corpus { line, message };
    let body = text
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| err(format!("expected [p,q,r,mu0,mu1], found '{text}'")))?;
    let nums: Vec<usize> = body
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| err(format!("bad value '{}'", x.trim()))))
        .collect::<Result<_>>()?;
    nums.try_into().map_err(|v: Vec<usize>| err(format!("expected 5 values, found {}", v.len())))
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split(';').map(str::trim).collect();
        if fields.len() < 3 || fields.len() > 4 {
            return Err(Error::Corpus { line, message: format!("expected 3 or 4 fields, found {}", fields.len()) });
        }
        let ideal = fields[1]
            .parse::<MonomialIdeal>()
            .map_err(|e| Error::Corpus { line, message: e.to_string() })?;
        let expected = fields[2]
            .parse::<KoszulClass>()
            .map_err(|e| Error::Corpus { line, message: e.to_string() })?;
        let values = match fields.get(3) {
            Some(v) if !v.is_empty() => Some(parse_values(v, line)?),
            _ => None,
        };
        out.push(CorpusEntry {
            name: fields[0].to_string(),
            ideal_text: fields[1].to_string(),
            ideal,
            expected,
            values,
            line,
        });
    }
    Ok(out)
}

/// A corpus entry whose computed invariants differ from the expectation.
#[derive(Clone, Debug, Serialize)]
pub struct CorpusMismatch {
    pub name: String,
    pub line: usize,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub entries: usize,
    pub matched: usize,
    pub mismatches: Vec<CorpusMismatch>,
}

impl CorpusSummary {
    pub fn all_match(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `[p, q, r, μ⁰, μ¹]` of a report.
pub fn report_values(r: &InvariantReport) -> [usize; 5] {
    [r.p, r.q, r.r, r.mu0, r.mu1]
}

/// Compares one report with its entry; `None` when they agree.
pub fn check_entry(entry: &CorpusEntry, report: &Result<InvariantReport>) -> Option<CorpusMismatch> {
    let describe = |cls: &str, values: Option<[usize; 5]>| match values {
        Some(v) => format!("{cls} {v:?}"),
        None => cls.to_string(),
    };
    let expected = describe(&entry.expected.label(), entry.values);
    let got = match report {
        Err(e) => format!("error: {e}"),
        Ok(r) => {
            let values_ok = entry.values.is_none_or(|v| v == report_values(r));
            if r.cls.label() == entry.expected.label() && values_ok {
                return None;
            }
            describe(&r.cls.to_string(), Some(report_values(r)))
        }
    };
    Some(CorpusMismatch { name: entry.name.clone(), line: entry.line, expected, got })
}

pub fn run_corpus(entries: &[CorpusEntry], cfg: &Config) -> CorpusSummary {
    let mut summary = CorpusSummary { entries: entries.len(), ..CorpusSummary::default() };
    for e in entries {
        match check_entry(e, &classify(&e.ideal, cfg)) {
            None => summary.matched += 1,
            Some(m) => summary.mismatches.push(m),
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_corpus_parses() {
        let entries = parse_corpus(SHIPPED_CORPUS).unwrap();
        assert!(entries.len() >= 12);
        assert!(entries.iter().all(|e| e.values.is_some()));
    }

    #[test]
    fn format_errors_carry_line_numbers() {
        let text = "# header\nok ; x^2,y^2,z^2 ; C(3)\nbad ; x^2,y^2 ; T ; [1,2]\n";
        match parse_corpus(text) {
            Err(Error::Corpus { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_corpus("a ; x^2,w ; T"), Err(Error::Corpus { line: 1, .. })));
        assert!(matches!(parse_corpus("a ; x^2,y^2,z^2 ; Q"), Err(Error::Corpus { line: 1, .. })));
    }

    #[test]
    fn empty_corpus() {
        let s = run_corpus(&parse_corpus("# nothing\n\n").unwrap(), &Config::default());
        assert_eq!(s.entries, 0);
        assert!(s.all_match());
    }

    #[test]
    fn wrong_label_is_reported() {
        let entries = parse_corpus("ci ; x^2,y^2,z^2 ; T").unwrap();
        let s = run_corpus(&entries, &Config::default());
        assert_eq!(s.mismatches.len(), 1);
        assert_eq!(s.mismatches[0].got, "C(3) [3, 1, 3, 1, 0]");
    }
}
