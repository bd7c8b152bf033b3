//! The JSON algebra file format.
//!
//! ```json
//! {
//!   "name": "lrex0",
//!   "labels": ["0", "a", "b", "c", "1"],
//!   "covers": [["0", "a"], ["0", "b"], ["a", "c"], ["b", "c"], ["c", "1"]],
//!   "times": "meet",
//!   "implies": [["1", "1", "1", "1", "1"], ...],
//!   "source": "..."
//! }
//! ```
//!
//! The lattice is given either by `covers` or by explicit `join`/`meet`
//! matrices (or both, in which case they must agree). Matrices are row-major
//! and indexed in label order.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Lattice, ResiduatedLattice, Table};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TimesSpec {
    /// Only `"meet"` is accepted.
    Shorthand(String),
    Table(Vec<Vec<String>>),
}

/// Golden values attached to a corpus entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boolean_center: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub principal_filters: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reticulation_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub co_stone: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strongly_co_stone: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stone_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coann_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partitions: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hull_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub labels: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
    pub times: TimesSpec,
    pub implies: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// Line and column (1-based) of the first occurrence of `"key"` in `text`.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    let Some(pos) = text.find(&needle) else {
        return (1, 1);
    };
    let before = &text[..pos];
    let line = before.matches('\n').count() + 1;
    let column = pos - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

fn parse_error(text: &str, key: &str, message: String) -> Error {
    let (line, column) = locate(text, key);
    Error::Parse { line, column, message }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    /// Resolves labels, synthesises missing tables and validates.
    ///
    /// `text` is the source document, used only to position error messages.
    pub fn build(&self, text: &str) -> Result<ResiduatedLattice> {
        let n = self.labels.len();
        if n == 0 {
            return Err(parse_error(text, "labels", "no labels".into()));
        }
        for (i, l) in self.labels.iter().enumerate() {
            if l.is_empty() || self.labels[..i].contains(l) {
                return Err(parse_error(text, "labels", format!("label `{l}` is empty or repeated")));
            }
        }
        let index = |key: &str, l: &str| {
            self.labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| parse_error(text, key, format!("unknown label `{l}` in `{key}`")))
        };
        let matrix = |key: &str, rows: &[Vec<String>]| -> Result<Vec<Vec<usize>>> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(parse_error(text, key, format!("`{key}` must be a {n}x{n} matrix")));
            }
            rows.iter()
                .map(|r| r.iter().map(|l| index(key, l)).collect())
                .collect()
        };
        let explicit = match (&self.join, &self.meet) {
            (Some(j), Some(m)) => Some((matrix("join", j)?, matrix("meet", m)?)),
            (None, None) => None,
            _ => return Err(parse_error(text, "join", "`join` and `meet` must come together".into())),
        };
        let from_covers = match &self.covers {
            Some(covers) => {
                let mut leq = vec![vec![false; n]; n];
                for (i, row) in leq.iter_mut().enumerate() {
                    row[i] = true;
                }
                for [lo, hi] in covers {
                    leq[index("covers", lo)?][index("covers", hi)?] = true;
                }
                // Reflexive-transitive closure.
                for k in 0..n {
                    let via = leq[k].clone();
                    for row in leq.iter_mut().filter(|row| row[k]) {
                        for (slot, &v) in row.iter_mut().zip(&via) {
                            *slot |= v;
                        }
                    }
                }
                let lat = Lattice::from_order(self.labels.clone(), &leq)
                    .map_err(|e| Error::Validation(Box::new(e)))?;
                Some((lat.join_table().rows(), lat.meet_table().rows()))
            }
            None => None,
        };
        let (join, meet) = match (explicit, from_covers) {
            (Some(e), Some(c)) => {
                if e != c {
                    return Err(parse_error(text, "covers", "covers disagree with the join/meet tables".into()));
                }
                e
            }
            (Some(e), None) | (None, Some(e)) => e,
            (None, None) => {
                return Err(parse_error(text, "name", "either `covers` or `join`/`meet` is required".into()))
            }
        };
        let times = match &self.times {
            TimesSpec::Shorthand(s) if s == "meet" => meet.clone(),
            TimesSpec::Shorthand(s) => {
                return Err(parse_error(text, "times", format!("unknown shorthand `{s}`, expected \"meet\"")))
            }
            TimesSpec::Table(rows) => matrix("times", rows)?,
        };
        let implies = matrix("implies", &self.implies)?;
        let tables = [join, meet, times, implies]
            .iter()
            .map(|t| Table::from_rows(t))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::Validation(Box::new(e)))?;
        ResiduatedLattice::from_tables(self.labels.clone(), tables, Default::default())
            .map_err(|e| Error::Validation(Box::new(e)))
    }

    /// File contents for `alg`: covers, `"meet"` shorthand when `⊙ = ∧`.
    pub fn from_algebra(name: &str, alg: &ResiduatedLattice) -> AlgebraFile {
        let labels = alg.labels().to_vec();
        let named = |t: &Table| -> Vec<Vec<String>> {
            t.rows()
                .iter()
                .map(|r| r.iter().map(|&x| labels[x].clone()).collect())
                .collect()
        };
        let times = if alg.times_table() == alg.lattice().meet_table() {
            TimesSpec::Shorthand("meet".into())
        } else {
            TimesSpec::Table(named(alg.times_table()))
        };
        AlgebraFile {
            name: name.into(),
            covers: Some(
                alg.lattice()
                    .covers()
                    .into_iter()
                    .map(|(lo, hi)| [labels[lo].clone(), labels[hi].clone()])
                    .collect(),
            ),
            join: None,
            meet: None,
            times,
            implies: named(alg.implies_table()),
            source: None,
            expected: None,
            labels,
        }
    }

    /// Pretty JSON with one matrix row per line.
    pub fn to_json(&self) -> String {
        let s = |x: &str| serde_json::to_string(x).expect("strings serialise");
        let row = |r: &[String]| format!("[{}]", r.iter().map(|x| s(x)).collect::<Vec<_>>().join(", "));
        let matrix = |m: &[Vec<String>]| {
            let rows: Vec<String> = m.iter().map(|r| format!("    {}", row(r))).collect();
            format!("[\n{}\n  ]", rows.join(",\n"))
        };
        let mut fields = vec![format!("  \"name\": {}", s(&self.name)), format!("  \"labels\": {}", row(&self.labels))];
        if let Some(c) = &self.covers {
            let pairs: Vec<String> = c.iter().map(|p| row(p)).collect();
            fields.push(format!("  \"covers\": [{}]", pairs.join(", ")));
        }
        if let (Some(j), Some(m)) = (&self.join, &self.meet) {
            fields.push(format!("  \"join\": {}", matrix(j)));
            fields.push(format!("  \"meet\": {}", matrix(m)));
        }
        fields.push(match &self.times {
            TimesSpec::Shorthand(x) => format!("  \"times\": {}", s(x)),
            TimesSpec::Table(t) => format!("  \"times\": {}", matrix(t)),
        });
        fields.push(format!("  \"implies\": {}", matrix(&self.implies)));
        if let Some(src) = &self.source {
            fields.push(format!("  \"source\": {}", s(src)));
        }
        if let Some(e) = &self.expected {
            fields.push(format!(
                "  \"expected\": {}",
                serde_json::to_string(e).expect("expected block serialises")
            ));
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }
}

pub fn parse_str(text: &str) -> Result<ResiduatedLattice> {
    AlgebraFile::parse(text)?.build(text)
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<ResiduatedLattice> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_str(&text)
}

pub fn serialize(name: &str, alg: &ResiduatedLattice) -> String {
    AlgebraFile::from_algebra(name, alg).to_json()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn round_trip_lrex0() {
        let a = corpus::get("lrex0").unwrap();
        let text = serialize("lrex0", &a);
        assert!(text.contains("\"times\": \"meet\""));
        assert_eq!(parse_str(&text).unwrap(), a);
    }

    #[test]
    fn two_maximal_elements_fail_validation() {
        let text = r#"{"name": "v", "labels": ["0", "x", "y"], "covers": [["0","x"],["0","y"]],
            "times": "meet", "implies": [["1","1","1"],["0","1","0"],["0","0","1"]]}"#;
        assert!(matches!(parse_str(text), Err(Error::Validation(_))));
    }

    #[test]
    fn tables_without_covers() {
        let text = r#"{"name": "c2", "labels": ["0", "1"],
            "join": [["0","1"],["1","1"]], "meet": [["0","0"],["0","1"]],
            "times": "meet", "implies": [["1","1"],["0","1"]]}"#;
        let a = parse_str(text).unwrap();
        assert_eq!(a.size(), 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_str("{\n  \"name\": \"x\",\n  oops\n}").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let text = "{\"name\": \"x\", \"labels\": [\"0\",\"1\"],\n\"covers\": [[\"0\",\"z\"]], \"times\": \"meet\", \"implies\": [[\"1\",\"1\"],[\"0\",\"1\"]]}";
        assert!(matches!(parse_str(text), Err(Error::Parse { line: 2, column: 1, .. })));
    }

    #[test]
    fn unknown_shorthand_is_rejected() {
        let text = r#"{"name": "c2", "labels": ["0", "1"], "covers": [["0","1"]],
            "times": "join", "implies": [["1","1"],["0","1"]]}"#;
        assert!(matches!(parse_str(text), Err(Error::Parse { .. })));
    }
}
