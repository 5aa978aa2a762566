//! Best-known parameter records.
//!
//! Records persist one per line as `N k v t p method source`, where `source`
//! is `constructed`, `imported` or `fixture:<table>`. Entries are keyed by
//! `(N, v, t, p)` and only the largest `k` per key is kept.

mod fixtures;

pub use fixtures::{fixtures, Fixture};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::construct::{best_factor_pair, construct_dn2, two_row_grid, RowExtension, Validation};
use crate::error::{Error, Result};
use crate::family::HashFamily;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Source {
    Constructed,
    Fixture(String),
    Imported,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Constructed => write!(f, "constructed"),
            Source::Fixture(id) => write!(f, "fixture:{id}"),
            Source::Imported => write!(f, "imported"),
        }
    }
}

impl FromStr for Source {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "constructed" => Ok(Source::Constructed),
            "imported" => Ok(Source::Imported),
            _ => match s.strip_prefix("fixture:") {
                Some(id) if !id.is_empty() => Ok(Source::Fixture(id.to_string())),
                _ => Err(Error::invalid(format!("unknown source {s:?}"))),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableEntry {
    pub n: usize,
    pub k: usize,
    pub v: usize,
    pub t: usize,
    pub p: usize,
    pub method: String,
    pub source: Source,
}

impl TableEntry {
    pub fn new(
        n: usize,
        k: usize,
        v: usize,
        t: usize,
        p: usize,
        method: impl Into<String>,
        source: Source,
    ) -> Result<Self> {
        let e = Self {
            n,
            k,
            v,
            t,
            p,
            method: method.into(),
            source,
        };
        e.validate()?;
        Ok(e)
    }

    /// Entry for a family with claimed strength, keyed by its widest row;
    /// the width profile is appended to `method` for heterogeneous families.
    pub fn from_family(a: &HashFamily, method: &str, source: Source) -> Result<Self> {
        let t = a
            .claimed_strength()
            .ok_or_else(|| Error::invalid("family carries no claimed strength"))?;
        let p = a.claimed_parts().unwrap_or(t);
        let mut method = method.to_string();
        if a.widths().iter().any(|&w| w != a.max_width()) {
            method.push_str(&format!("[{}]", a.width_profile().replace(' ', ",")));
        }
        Self::new(a.rows(), a.cols(), a.max_width(), t, p, method, source)
    }

    pub fn key(&self) -> (usize, usize, usize, usize) {
        (self.n, self.v, self.t, self.p)
    }

    fn validate(&self) -> Result<()> {
        if [self.n, self.k, self.v, self.t, self.p].contains(&0) {
            return Err(Error::invalid("table entries need positive N, k, v, t, p"));
        }
        if self.p > self.t {
            return Err(Error::invalid(format!(
                "parts {} exceed strength {}",
                self.p, self.t
            )));
        }
        if self.method.is_empty() || self.method.chars().any(char::is_whitespace) {
            return Err(Error::invalid(format!(
                "method must be a non-empty word, got {:?}",
                self.method
            )));
        }
        Ok(())
    }
}

impl fmt::Display for TableEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {} {} {} {}",
            self.n, self.k, self.v, self.t, self.p, self.method, self.source
        )
    }
}

impl FromStr for TableEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let [n, k, v, t, p, method, source] = toks.as_slice() else {
            return Err(Error::invalid(format!(
                "expected 7 fields, got {}",
                toks.len()
            )));
        };
        let num = |x: &str| {
            x.parse::<usize>()
                .map_err(|_| Error::invalid(format!("not a count: {x:?}")))
        };
        Self::new(
            num(n)?,
            num(k)?,
            num(v)?,
            num(t)?,
            num(p)?,
            *method,
            source.parse()?,
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExistenceTable {
    entries: BTreeMap<(usize, usize, usize, usize), TableEntry>,
}

impl ExistenceTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores `entry` if it beats the current `k` for its key. Returns whether
    /// the table changed.
    pub fn record(&mut self, entry: TableEntry) -> Result<bool> {
        entry.validate()?;
        match self.entries.get(&entry.key()) {
            Some(old) if old.k >= entry.k => Ok(false),
            _ => {
                self.entries.insert(entry.key(), entry);
                Ok(true)
            }
        }
    }

    pub fn get(&self, n: usize, v: usize, t: usize, p: usize) -> Option<&TableEntry> {
        self.entries.get(&(n, v, t, p))
    }

    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.entries.values()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest `N` with a recorded perfect family on at least `k` columns
    /// over at most `v` symbols at strength `t`.
    pub fn min_rows(&self, k: usize, v: usize, t: usize) -> Option<usize> {
        self.entries
            .values()
            .filter(|e| e.t == t && e.p == t && e.v <= v && e.k >= k)
            .map(|e| e.n)
            .min()
    }

    /// Records every published `k_fractal` value. Returns the number of
    /// fixtures loaded.
    pub fn import_fixtures(&mut self) -> usize {
        let all = fixtures();
        for f in &all {
            let entry = TableEntry::new(
                f.n,
                f.k_fractal,
                f.v,
                f.t,
                f.t,
                "published",
                Source::Fixture(f.table_id.to_string()),
            )
            .expect("fixture entries are valid");
            self.record(entry).expect("validated above");
        }
        all.len()
    }

    pub fn export(&self) -> String {
        self.entries.values().map(|e| format!("{e}\n")).collect()
    }

    /// Parses an exported table; blank lines and `#` comments are skipped.
    pub fn import(text: &str) -> Result<Self> {
        let mut table = Self::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let entry: TableEntry = line
                .parse()
                .map_err(|e: Error| Error::parse(i + 1, e.to_string()))?;
            table.record(entry)?;
        }
        Ok(table)
    }
}

/// Four-row perfect family of strength 6 over `v` symbols, `v = 3 kappa + 1`:
/// the balanced dn2 extension of a two-row grid with the most compact factor
/// pair of `kappa`.
pub fn dn2_four_row(v: usize) -> Result<(HashFamily, String)> {
    if v < 4 || !(v - 1).is_multiple_of(3) {
        return Err(Error::invalid(format!(
            "four-row dn2 needs v = 3 kappa + 1, got {v}"
        )));
    }
    let kappa = (v - 1) / 3;
    let (w1, w2) = best_factor_pair(kappa);
    let grid = two_row_grid(kappa, w1, w2)?;
    let a = construct_dn2(4, &grid, RowExtension::Balanced, Validation::Verify)?;
    Ok((a, format!("dn2(n=4,kappa={kappa},w={w1},{w2})")))
}

/// Runs [`dn2_four_row`] for every admissible `v` among the four-row
/// strength-6 fixtures.
pub fn dn2_sweep() -> Result<Vec<TableEntry>> {
    fixtures()
        .iter()
        .filter(|f| f.n == 4 && f.t == 6 && (f.v - 1) % 3 == 0)
        .map(|f| {
            let (a, method) = dn2_four_row(f.v)?;
            TableEntry::from_family(&a, &method, Source::Constructed)
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffStatus {
    Matched,
    Below {
        gap: usize,
    },
    Above {
        gain: usize,
    },
    NotAttempted,
    /// Anomalous fixture, never compared.
    Excluded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffRow {
    pub fixture: Fixture,
    pub constructed_k: Option<usize>,
    pub status: DiffStatus,
}

impl fmt::Display for DiffRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fx = &self.fixture;
        write!(f, "{} v={} k_fractal={} ", fx.table_id, fx.v, fx.k_fractal)?;
        match (self.status, self.constructed_k) {
            (DiffStatus::Matched, _) => write!(f, "matched"),
            (DiffStatus::Below { gap }, Some(k)) => write!(f, "below k={k} gap={gap}"),
            (DiffStatus::Above { gain }, Some(k)) => write!(f, "above k={k} gain={gain}"),
            (DiffStatus::Excluded, _) => write!(f, "excluded (anomalous fixture)"),
            _ => write!(f, "not-attempted"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub rows: Vec<DiffRow>,
}

impl DiffReport {
    pub fn count(&self, pred: impl Fn(&DiffStatus) -> bool) -> usize {
        self.rows.iter().filter(|r| pred(&r.status)).count()
    }

    pub fn table(&self, id: &str) -> impl Iterator<Item = &DiffRow> {
        let id = id.to_string();
        self.rows.iter().filter(move |r| r.fixture.table_id == id)
    }
}

impl fmt::Display for DiffReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        write!(
            f,
            "matched={} below={} above={} not-attempted={} excluded={}",
            self.count(|s| *s == DiffStatus::Matched),
            self.count(|s| matches!(s, DiffStatus::Below { .. })),
            self.count(|s| matches!(s, DiffStatus::Above { .. })),
            self.count(|s| *s == DiffStatus::NotAttempted),
            self.count(|s| *s == DiffStatus::Excluded),
        )
    }
}

/// Classifies each fixture against the best constructed `k` for its key.
/// Entries whose source is a fixture are ignored.
pub fn diff_against_fixtures<'a>(
    constructed: impl IntoIterator<Item = &'a TableEntry>,
) -> DiffReport {
    let mut best: BTreeMap<(usize, usize, usize, usize), usize> = BTreeMap::new();
    for e in constructed {
        if matches!(e.source, Source::Fixture(_)) {
            continue;
        }
        let k = best.entry(e.key()).or_insert(0);
        *k = (*k).max(e.k);
    }
    let rows = fixtures()
        .into_iter()
        .map(|fx| {
            let constructed_k = best.get(&(fx.n, fx.v, fx.t, fx.t)).copied();
            let status = match constructed_k {
                _ if fx.anomaly => DiffStatus::Excluded,
                None => DiffStatus::NotAttempted,
                Some(k) if k == fx.k_fractal => DiffStatus::Matched,
                Some(k) if k < fx.k_fractal => DiffStatus::Below {
                    gap: fx.k_fractal - k,
                },
                Some(k) => DiffStatus::Above {
                    gain: k - fx.k_fractal,
                },
            };
            DiffRow {
                fixture: fx,
                constructed_k,
                status,
            }
        })
        .collect();
    DiffReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(k: usize) -> TableEntry {
        TableEntry::new(
            4,
            k,
            121,
            6,
            6,
            "dn2(n=4,kappa=40,w=5,8)",
            Source::Constructed,
        )
        .unwrap()
    }

    #[test]
    fn record_keeps_maximum() {
        let mut t = ExistenceTable::new();
        assert!(t.record(entry(188)).unwrap());
        assert!(!t.record(entry(188)).unwrap());
        assert!(!t.record(entry(187)).unwrap());
        assert!(t.record(entry(189)).unwrap());
        assert_eq!(t.get(4, 121, 6, 6).unwrap().k, 189);
    }

    #[test]
    fn invalid_entries() {
        assert!(TableEntry::new(0, 1, 1, 1, 1, "x", Source::Imported).is_err());
        assert!(TableEntry::new(1, 1, 1, 2, 3, "x", Source::Imported).is_err());
        assert!(TableEntry::new(1, 1, 1, 2, 2, "two words", Source::Imported).is_err());
        assert!("1 2 3".parse::<TableEntry>().is_err());
        assert!("1 2 3 4 4 m elsewhere".parse::<TableEntry>().is_err());
    }

    #[test]
    fn line_format() {
        let e = TableEntry::new(7, 70, 46, 9, 2, "dn5", Source::Fixture("t9n6".into())).unwrap();
        assert_eq!(e.to_string(), "7 70 46 9 2 dn5 fixture:t9n6");
        assert_eq!(e.to_string().parse::<TableEntry>().unwrap(), e);
    }

    #[test]
    fn export_import_round_trip() {
        let mut t = ExistenceTable::new();
        assert_eq!(t.import_fixtures(), 157);
        t.record(entry(400)).unwrap();
        let again = ExistenceTable::import(&t.export()).unwrap();
        assert_eq!(again, t);
        assert_eq!(t.len(), 157);
    }

    #[test]
    fn min_rows_view() {
        let mut t = ExistenceTable::new();
        t.import_fixtures();
        assert_eq!(t.min_rows(188, 121, 6), Some(4));
        assert_eq!(t.min_rows(189, 121, 6), Some(5));
        assert_eq!(t.min_rows(10_000, 121, 6), None);
    }

    #[test]
    fn empty_diff_is_not_attempted() {
        let d = diff_against_fixtures(&[]);
        assert_eq!(d.count(|s| *s == DiffStatus::NotAttempted), 154);
        assert_eq!(d.count(|s| *s == DiffStatus::Excluded), 3);
    }

    #[test]
    fn dn2_sweep_matches_four_row_table() {
        let sweep = dn2_sweep().unwrap();
        let ks: Vec<usize> = sweep.iter().map(|e| e.k).collect();
        assert_eq!(ks, [188, 198, 256, 260, 266, 334, 344]);
        assert_eq!(sweep[0].method, "dn2(n=4,kappa=40,w=5,8)");
        let d = diff_against_fixtures(&sweep);
        assert_eq!(d.count(|s| *s == DiffStatus::Matched), 7);
        assert!(dn2_four_row(122).is_err());
    }

    #[test]
    fn below_and_above() {
        let d = diff_against_fixtures(&[
            entry(160),
            TableEntry::new(4, 200, 127, 6, 6, "x", Source::Constructed).unwrap(),
        ]);
        let rows: Vec<_> = d.table("t6n4").collect();
        assert_eq!(rows[0].status, DiffStatus::Below { gap: 28 });
        assert_eq!(rows[1].status, DiffStatus::Above { gain: 2 });
    }
}
