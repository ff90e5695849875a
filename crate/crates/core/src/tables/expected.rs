//! The printed tables, embedded as tab-separated `table key expected source note` rows.

use once_cell::sync::Lazy;

/// Table ids in report order.
pub const TABLE_IDS: [&str; 13] = [
    "sec3.subgroups",
    "sec4.rulings",
    "sec4.meeting",
    "sec4.fixlines",
    "sec5.quadric",
    "sec5.offquadric",
    "sec5.sing",
    "sec6.nu",
    "sec7.cover",
    "sec7.components",
    "sec8.discs",
    "sec8.classes",
    "sec9.cover",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedCell {
    pub key: String,
    pub expected: String,
    /// Where the value is printed.
    pub citation: String,
    /// Set when the printed value is known to disagree with the rest of its table.
    pub erratum: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedTable {
    pub table_id: &'static str,
    pub cells: Vec<ExpectedCell>,
}

impl ExpectedTable {
    pub fn cell(&self, key: &str) -> Option<&ExpectedCell> {
        self.cells.iter().find(|c| c.key == key)
    }
}

static TABLES: Lazy<Vec<ExpectedTable>> = Lazy::new(|| {
    let mut tables: Vec<ExpectedTable> = TABLE_IDS
        .iter()
        .map(|&id| ExpectedTable {
            table_id: id,
            cells: Vec::new(),
        })
        .collect();
    for (n, line) in include_str!("../../data/expected.tsv").lines().enumerate().skip(1) {
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split('\t').collect();
        assert!(f.len() >= 4, "expected.tsv line {}: too few fields", n + 1);
        let t = tables
            .iter_mut()
            .find(|t| t.table_id == f[0])
            .unwrap_or_else(|| panic!("expected.tsv line {}: unknown table {}", n + 1, f[0]));
        let erratum = f.get(4).map(|s| s.trim()).filter(|s| !s.is_empty()).map(str::to_string);
        t.cells.push(ExpectedCell {
            key: f[1].to_string(),
            expected: f[2].to_string(),
            citation: f[3].to_string(),
            erratum,
        });
    }
    tables
});

pub fn expected_tables() -> &'static [ExpectedTable] {
    &TABLES
}

pub fn expected_table(id: &str) -> Option<&'static ExpectedTable> {
    TABLES.iter().find(|t| t.table_id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn every_cell_has_a_citation_and_unique_key() {
        for t in expected_tables() {
            assert!(!t.cells.is_empty(), "{}", t.table_id);
            let mut seen = BTreeSet::new();
            for c in &t.cells {
                assert!(!c.citation.trim().is_empty(), "{} {}", t.table_id, c.key);
                assert!(seen.insert(&c.key), "duplicate {} {}", t.table_id, c.key);
            }
        }
    }

    #[test]
    fn smooth_nu_row() {
        let t = expected_table("sec6.nu").unwrap();
        let row: Vec<&str> = ["TxV", "TT1", "VxV", "OxT", "OO2", "TxT"]
            .iter()
            .map(|g| t.cell(&format!("{g}.smooth.nu")).unwrap().expected.as_str())
            .collect();
        assert_eq!(row, ["19", "17", "15", "19", "18", "18"]);
    }

    #[test]
    fn errata_are_marked() {
        let t = expected_table("sec4.fixlines").unwrap();
        assert!(t.cell("OxT.M'.ratio").unwrap().erratum.is_some());
        assert!(t.cell("OxT.M.ratio").unwrap().erratum.is_none());
    }
}
