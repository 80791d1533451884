//! Golden dataset and term-mapping files.
//!
//! Datasets are TSV with a header whose third column is `score` or `rank`.
//! Mappings are TSV `term<TAB>iri`; `#` lines and blank lines are skipped.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::BenchError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GoldenPair {
    pub term1: String,
    pub term2: String,
    pub human_score: Option<f64>,
    pub rank: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GoldKind {
    Score,
    Rank,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub name: String,
    pub kind: GoldKind,
    pub pairs: Vec<GoldenPair>,
}

impl Dataset {
    /// Gold relatedness per pair; a rank r becomes n − r so higher is more related.
    pub fn gold(&self, pair: &GoldenPair) -> f64 {
        match (pair.human_score, pair.rank) {
            (Some(s), _) => s,
            (None, Some(r)) => self.pairs.len() as f64 - r as f64,
            (None, None) => unreachable!("pairs always carry a score or a rank"),
        }
    }
}

fn malformed(file: &str, row: usize, message: impl Into<String>) -> BenchError {
    BenchError::Malformed {
        file: file.to_string(),
        row,
        message: message.into(),
    }
}

fn file_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

pub fn load_dataset(path: &Path) -> Result<Dataset, BenchError> {
    let text = fs::read_to_string(path)?;
    parse_dataset(&file_name(path), &text)
}

/// Rows are numbered from 1, counting the header.
pub fn parse_dataset(name: &str, text: &str) -> Result<Dataset, BenchError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((_, header)) = lines.next() else {
        return Ok(Dataset {
            name: name.to_string(),
            kind: GoldKind::Score,
            pairs: Vec::new(),
        });
    };
    let kind = match header.split('\t').nth(2).map(str::trim) {
        Some("score") => GoldKind::Score,
        Some("rank") => GoldKind::Rank,
        other => {
            return Err(malformed(
                name,
                1,
                format!("third header column must be `score` or `rank`, got {other:?}"),
            ))
        }
    };
    let mut pairs = Vec::new();
    for (i, line) in lines {
        let row = i + 1;
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [term1, term2, value] = fields[..] else {
            return Err(malformed(
                name,
                row,
                format!("expected 3 fields, got {}", fields.len()),
            ));
        };
        if term1.is_empty() || term2.is_empty() {
            return Err(malformed(name, row, "empty term"));
        }
        let (human_score, rank) = match kind {
            GoldKind::Score => {
                let v: f64 = value
                    .parse()
                    .map_err(|_| malformed(name, row, format!("bad score `{value}`")))?;
                if !v.is_finite() {
                    return Err(malformed(name, row, format!("bad score `{value}`")));
                }
                (Some(v), None)
            }
            GoldKind::Rank => {
                let r: u64 = value
                    .parse()
                    .map_err(|_| malformed(name, row, format!("bad rank `{value}`")))?;
                (None, Some(r))
            }
        };
        pairs.push(GoldenPair {
            term1: term1.to_string(),
            term2: term2.to_string(),
            human_score,
            rank,
        });
    }
    Ok(Dataset {
        name: name.to_string(),
        kind,
        pairs,
    })
}

/// True for strings of the form `scheme:rest`.
pub fn is_absolute_iri(s: &str) -> bool {
    match s.split_once(':') {
        Some((scheme, rest)) => {
            !rest.is_empty()
                && scheme.starts_with(|c: char| c.is_ascii_alphabetic())
                && scheme
                    .chars()
                    .all(|c| c.is_ascii_alphanumeric() || matches!(c, '+' | '-' | '.'))
        }
        None => false,
    }
}

/// Term → IRI table encoding manual disambiguation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermMapping(pub BTreeMap<String, String>);

impl TermMapping {
    pub fn get(&self, term: &str) -> Option<&str> {
        self.0.get(term).map(String::as_str)
    }
}

pub fn load_mapping(path: &Path) -> Result<TermMapping, BenchError> {
    let text = fs::read_to_string(path)?;
    parse_mapping(&file_name(path), &text)
}

pub fn parse_mapping(name: &str, text: &str) -> Result<TermMapping, BenchError> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((term, iri)) = line.split_once('\t') else {
            return Err(malformed(name, i + 1, "expected `term<TAB>iri`"));
        };
        let iri = iri.trim().trim_start_matches('<').trim_end_matches('>');
        if !is_absolute_iri(iri) {
            return Err(malformed(
                name,
                i + 1,
                format!("`{iri}` is not an absolute IRI"),
            ));
        }
        map.insert(term.trim().to_string(), iri.to_string());
    }
    Ok(TermMapping(map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn score_dataset() {
        let d = parse_dataset(
            "t",
            "w1\tw2\tscore\ncar\tautomobile\t3.92\ngem\tjewel\t3.84\n",
        )
        .unwrap();
        assert_eq!(d.kind, GoldKind::Score);
        assert_eq!(d.pairs.len(), 2);
        assert_eq!(d.pairs[1].human_score, Some(3.84));
        assert_eq!(d.gold(&d.pairs[0]), 3.92);
    }

    #[test]
    fn rank_dataset() {
        let d = parse_dataset("k", "a\tb\trank\nx\ty\t1\nx\tz\t2\nx\tw\t3\n").unwrap();
        assert_eq!(d.kind, GoldKind::Rank);
        assert!(d.pairs.iter().all(|p| p.human_score.is_none()));
        let gold: Vec<f64> = d.pairs.iter().map(|p| d.gold(p)).collect();
        assert_eq!(gold, vec![2.0, 1.0, 0.0]);
    }

    #[test]
    fn empty_and_malformed() {
        assert!(parse_dataset("e", "").unwrap().pairs.is_empty());
        let err = parse_dataset("m", "a\tb\tscore\nx\ty\t1\nx\ty\n").unwrap_err();
        assert!(matches!(err, BenchError::Malformed { row: 3, .. }), "{err}");
        let err = parse_dataset("m", "a\tb\tscore\nx\ty\tfoo\n").unwrap_err();
        assert!(matches!(err, BenchError::Malformed { row: 2, .. }));
        assert!(parse_dataset("m", "a\tb\tsimilarity\n").is_err());
    }

    #[test]
    fn mapping_file() {
        let m = parse_mapping(
            "map",
            "# disambiguation\ncrane\thttp://dbpedia.org/resource/Crane_(bird)\nbird\t<http://dbpedia.org/resource/Bird>\n",
        )
        .unwrap();
        assert_eq!(
            m.get("crane"),
            Some("http://dbpedia.org/resource/Crane_(bird)")
        );
        assert_eq!(m.get("bird"), Some("http://dbpedia.org/resource/Bird"));
        assert!(parse_mapping("map", "crane\tCrane_(bird)\n").is_err());
    }

    #[test]
    fn absolute_iris() {
        assert!(is_absolute_iri("http://example.org/a"));
        assert!(is_absolute_iri("urn:isbn:123"));
        assert!(!is_absolute_iri("crane"));
        assert!(!is_absolute_iri("1x:y"));
    }
}
