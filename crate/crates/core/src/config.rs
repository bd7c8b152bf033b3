use crate::par::Strategy;

/// Size limits for the exhaustive constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest direct product that will be materialised.
    pub product: usize,
    /// Largest carrier handed to the isomorphism search.
    pub iso_search: usize,
    /// Largest carrier whose filters are enumerated by scanning all subsets.
    pub filter_enumeration: usize,
    /// Most atoms of a co-annihilator algebra whose partitions are enumerated.
    pub partition_atoms: usize,
    /// Most partitions for which the generic inductive-limit hull is built.
    pub limit_index: usize,
    /// Largest target lattice used when enumerating competing cones.
    pub cone_target: usize,
    /// Largest carrier for which all nonempty subsets are scanned directly.
    pub exhaustive_subsets: usize,
    pub strategy: Strategy,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            product: 4096,
            iso_search: 24,
            filter_enumeration: 20,
            partition_atoms: 6,
            limit_index: 16,
            cone_target: 12,
            exhaustive_subsets: 10,
            strategy: Strategy::default(),
        }
    }
}
