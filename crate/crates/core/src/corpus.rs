//! Built-in example algebras.
//!
//! Stored examples are kept as JSON files (see [`crate::format`]) and carry
//! an `expected` block of golden values; chains and Boolean algebras are
//! generated on demand from keys `chain:<n>` and `boolean:<n>`.

use crate::algebra::{boolean, chain, ResiduatedLattice};
use crate::error::{Error, Result};
use crate::format::{AlgebraFile, Expected};

const FILES: [(&str, &str); 5] = [
    ("lrex0", include_str!("../corpus/lrex0.json")),
    ("lrex0_5", include_str!("../corpus/lrex0_5.json")),
    ("lrex3", include_str!("../corpus/lrex3.json")),
    ("lrex4", include_str!("../corpus/lrex4.json")),
    ("lrex8", include_str!("../corpus/lrex8.json")),
];

/// Keys of the stored examples, in listing order.
pub const EXAMPLE_KEYS: [&str; 5] = ["lrex0", "lrex0_5", "lrex3", "lrex4", "lrex8"];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub key: String,
    pub file: AlgebraFile,
    pub text: &'static str,
    pub expected: Expected,
}

pub fn entry(key: &str) -> Result<CorpusEntry> {
    let (_, text) = FILES
        .iter()
        .find(|(k, _)| *k == key)
        .ok_or_else(|| Error::UnknownKey(key.into()))?;
    let file = AlgebraFile::parse(text)?;
    Ok(CorpusEntry {
        key: key.into(),
        expected: file.expected.clone().unwrap_or_default(),
        file,
        text,
    })
}

/// The algebra stored under `key`.
pub fn get(key: &str) -> Result<ResiduatedLattice> {
    let generated = |prefix: &str| {
        key.strip_prefix(prefix)
            .map(|n| n.parse::<usize>().map_err(|_| Error::UnknownKey(key.into())))
    };
    if let Some(n) = generated("chain:") {
        return chain(n?);
    }
    if let Some(n) = generated("boolean:") {
        return boolean(n?);
    }
    let e = entry(key)?;
    e.file.build(e.text)
}

/// `(key, description)` for every stored example plus the generator families.
pub fn list() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = FILES
        .iter()
        .map(|(k, text)| {
            let source = AlgebraFile::parse(text)
                .ok()
                .and_then(|f| f.source)
                .unwrap_or_default();
            (k.to_string(), source)
        })
        .collect();
    out.push(("chain:<n>".into(), "n-element Gödel chain, n >= 1".into()));
    out.push(("boolean:<n>".into(), "Boolean algebra with n = 2^k elements".into()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;

    #[test]
    fn stored_examples_load() {
        for key in EXAMPLE_KEYS {
            let a = get(key).unwrap();
            assert_eq!(Some(a.size()), entry(key).unwrap().expected.size, "{key}");
        }
    }

    #[test]
    fn lrex3_times_row_c() {
        let a = get("lrex3").unwrap();
        let c = a.lattice().index_of("c").unwrap();
        let row: Vec<&str> = (0..6).map(|x| a.label(a.times(c, x))).collect();
        assert_eq!(row, ["0", "a", "0", "a", "b", "c"]);
    }

    #[test]
    fn generated_keys() {
        assert_eq!(get("chain:1").unwrap().size(), 1);
        assert_eq!(get("boolean:8").unwrap().size(), 8);
        assert_eq!(get("lrex9").unwrap_err(), Error::UnknownKey("lrex9".into()));
        assert!(matches!(get("chain:x"), Err(Error::UnknownKey(_))));
    }
}
