//! Built-in support lattices of the divisible classes on the quotient surfaces.

use crate::config::{parse_config, ConfigFile};
use crate::lattices::{DivisorClass, IntegralLattice};

/// A divisible class on a named surface, stored with the lattice spanned by its support.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    /// Surface on which the class lives.
    pub surface: &'static str,
    /// Class name inside the data file.
    pub class: &'static str,
    pub p: i64,
    pub file: &'static str,
    source: &'static str,
}

impl CatalogEntry {
    pub fn config(&self) -> ConfigFile {
        parse_config(self.source).expect("built-in lattice data parses")
    }

    pub fn lattice(&self) -> IntegralLattice {
        self.config().graph.to_lattice()
    }

    pub fn divisor(&self) -> DivisorClass {
        self.config().class(self.class).expect("class present").clone()
    }

    pub fn source(&self) -> &'static str {
        self.source
    }

    pub fn key(&self) -> String {
        format!("{}:{}", self.surface, self.class)
    }
}

macro_rules! entry {
    ($surface:expr, $class:expr, $p:expr, $file:literal) => {
        CatalogEntry {
            surface: $surface,
            class: $class,
            p: $p,
            file: $file,
            source: include_str!(concat!("../../data/lattices/", $file)),
        }
    };
}

pub static DIVISIBLE_CLASSES: &[CatalogEntry] = &[
    entry!("Y_TxT", "cL", 3, "y_txt.txt"),
    entry!("Y_TxT", "cL'", 3, "y_txt.txt"),
    entry!("Y_TxT", "cM", 3, "y_txt.txt"),
    entry!("Y_TxT", "cM'", 3, "y_txt.txt"),
    entry!("Y_OxO", "cL", 2, "y_oxo.txt"),
    entry!("Y_OxO", "cL'", 2, "y_oxo.txt"),
    entry!("Y_OxO", "cM", 2, "y_oxo.txt"),
    entry!("T_L", "Lbar'", 3, "t_l_lbar.txt"),
    entry!("T_L", "h1", 2, "t_l_h1.txt"),
    entry!("T_L", "h2", 2, "t_l_h2.txt"),
    entry!("O_L", "Lbar'", 2, "o_l_lbar.txt"),
    entry!("O_L", "k1", 3, "o_l_k1.txt"),
    entry!("O_L(8,4)", "v84", 2, "o_l_84.txt"),
    entry!("T_M(6,1)", "Lbar", 3, "t_m_lbar.txt"),
    entry!("T_M(6,2)", "u1", 2, "t_m_62a.txt"),
    entry!("T_M(6,2)", "u2", 2, "t_m_62b.txt"),
    entry!("O_M(8,4)", "Lbar", 2, "o_m_84.txt"),
    entry!("O_M(8,4)", "W", 4, "o_m_84.txt"),
    entry!("O_Lbar'(8,1)", "k1'", 3, "o_lbar_k1.txt"),
    entry!("O_Lbar'(8,1)", "k1''", 3, "o_lbar_k1.txt"),
    entry!("O_Lbar'(8,4)", "kappa", 2, "o_lbar_kappa.txt"),
];

pub fn find_entry(surface: &str, class: &str) -> Option<&'static CatalogEntry> {
    DIVISIBLE_CLASSES
        .iter()
        .find(|e| e.surface == surface && e.class == class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattices::{is_p_divisible, nikulin_count_check};

    #[test]
    fn every_entry_loads() {
        for e in DIVISIBLE_CLASSES {
            let l = e.lattice();
            let v = e.divisor();
            assert_eq!(v.coeffs.len(), l.rank(), "{}", e.key());
            assert!(l.is_even());
        }
    }

    #[test]
    fn w_summands_alone_are_not_divisible() {
        let e = find_entry("O_M(8,4)", "W").unwrap();
        let cfg = e.config();
        let l = cfg.graph.to_lattice();
        for name in ["v1", "v2", "v3", "v4"] {
            assert!(!is_p_divisible(&l, cfg.class(name).unwrap(), 4).unwrap(), "{name}");
        }
        assert!(is_p_divisible(&l, &e.divisor(), 4).unwrap());
        assert!(nikulin_count_check(&l, &e.divisor(), 4).unwrap());
    }
}
