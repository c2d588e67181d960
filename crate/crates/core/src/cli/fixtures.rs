use std::sync::OnceLock;

use serde::Deserialize;

/// One row of the reference counting table: patterns sharing a counting
/// sequence and its first terms, starting at length 1.
#[derive(Clone, Debug, Deserialize)]
pub struct FixtureRow {
    pub patterns: Vec<String>,
    pub oeis: Option<String>,
    pub values: Vec<u64>,
}

#[derive(Deserialize)]
struct Fixture {
    rows: Vec<FixtureRow>,
}

/// The embedded reference table.
pub fn reference_rows() -> &'static [FixtureRow] {
    static TABLE: OnceLock<Vec<FixtureRow>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let f: Fixture = serde_json::from_str(include_str!("../../data/reference_counts.json")).expect("valid fixture");
        f.rows
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_loads() {
        let rows = reference_rows();
        assert_eq!(rows.len(), 11);
        let r210 = rows.iter().find(|r| r.patterns == ["210"]).unwrap();
        assert_eq!(r210.values.len(), 13);
        assert!(rows.iter().all(|r| r.values[..2] == [1, 2]));
    }
}
