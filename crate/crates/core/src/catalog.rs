//! Small published families used as ingredients and test fixtures.

use crate::family::{canonicalize, HashFamily};

fn from_digits(rows: &[&str]) -> HashFamily {
    let raw: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.bytes().map(|b| u64::from(b - b'0')).collect())
        .collect();
    canonicalize(&raw, None).expect("catalog rows are rectangular")
}

/// PHF(4; 5, 4, 4): four rows, five columns, four symbols per row.
pub fn table1_phf() -> HashFamily {
    from_digits(&["11234", "12234", "12334", "12344"])
}

/// DHF(4; 10, 4, 4, 2). Fractal at two parts; it is not perfect.
pub fn table1_dhf() -> HashFamily {
    from_digits(&["1112223334", "1231231234", "1232313124", "1233122314"])
}
