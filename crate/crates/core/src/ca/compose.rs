//! Column replacement: a hash family indexes the columns of a small covering
//! array, one block of rows per hash row.

use super::CoveringArray;
use crate::error::{Error, Result};
use crate::family::{HashFamily, Symbol};

/// Non-constant rows of `ca`, in order.
fn block_rows(ca: &CoveringArray) -> Vec<usize> {
    let constant = ca.constant_row_indices();
    (0..ca.rows()).filter(|r| !constant.contains(r)).collect()
}

fn check_claim(a: &HashFamily, t: usize, parts: usize) -> Result<()> {
    if let Some(s) = a.claimed_strength() {
        if s < t {
            return Err(Error::PartCountMismatch(format!(
                "hash family claims strength {s}, covering array needs {t}"
            )));
        }
    }
    if let Some(p) = a.claimed_parts() {
        if p < parts {
            return Err(Error::PartCountMismatch(format!(
                "hash family claims {p} parts, at least {parts} are needed"
            )));
        }
    }
    Ok(())
}

/// Substitutes `ca` through every row of `a`: the constant rows once, then
/// for each hash row the non-constant rows with column `j` reading
/// `ca[i][a[m][j]]`.
fn replace(a: &HashFamily, ca: &CoveringArray) -> Result<CoveringArray> {
    if let Some(r) = (0..a.rows()).find(|&r| a.widths()[r] > ca.cols()) {
        return Err(Error::PairingMismatch(format!(
            "row {r} of the hash family uses {} symbols but the covering array has {} columns",
            a.widths()[r],
            ca.cols()
        )));
    }
    let l = a.cols();
    let mut rows: Vec<Vec<Symbol>> = ca
        .constant_row_indices()
        .into_iter()
        .map(|r| vec![ca.row(r)[0]; l])
        .collect();
    let body = block_rows(ca);
    for h in a.row_iter() {
        for &i in &body {
            let src = ca.row(i);
            rows.push(h.iter().map(|&s| src[s as usize]).collect());
        }
    }
    CoveringArray::new(rows, ca.v(), ca.strength())
}

/// CA(rho + M(N - rho); t, l, v) from a PHF(M; l, k, t) and a CA(N; t, k, v)
/// with `rho` constant rows.
pub fn compose_phf(phf: &HashFamily, ca: &CoveringArray) -> Result<CoveringArray> {
    check_claim(phf, ca.strength(), ca.strength())?;
    replace(phf, ca)
}

/// CA(rho + M(N - rho); t, l, v) from a DHF(M; l, k, t, min(t, v)) and a
/// CA(N; t, k, v). Claimed strength and parts of `dhf`, when present, are
/// checked.
pub fn compose_dhf(dhf: &HashFamily, ca: &CoveringArray, v: usize) -> Result<CoveringArray> {
    if v != ca.v() {
        return Err(Error::PairingMismatch(format!(
            "alphabet {v} does not match the covering array's {}",
            ca.v()
        )));
    }
    let need = ca.strength().min(v);
    if ca.cols() < need {
        return Err(Error::PairingMismatch(format!(
            "covering array has {} columns, needs at least min(t, v) = {need}",
            ca.cols()
        )));
    }
    check_claim(dhf, ca.strength(), need)?;
    replace(dhf, ca)
}

/// Row count `chi + sum u_i (N_i - rho_i)` with
/// `chi = max(0, v - sum u_i (v - rho_i))`, for groups `(u_i, N_i, rho_i)`.
pub fn hetgen_row_count(groups: &[(usize, usize, usize)], v: usize) -> usize {
    let spread: usize = groups.iter().map(|&(u, _, rho)| u * (v - rho.min(v))).sum();
    let chi = v.saturating_sub(spread);
    chi + groups
        .iter()
        .map(|&(u, n, rho)| u * (n - rho))
        .sum::<usize>()
}

/// Column replacement for a heterogeneous family: row `r` of `dhhf` uses
/// the first array in `cas` with exactly `widths[r]` columns.
///
/// Each block drops its constant rows. Its symbols are renamed so that the
/// symbols without a constant row land on the symbols covered by the fewest
/// earlier blocks (ties by value). Symbols no block covers get a constant
/// row at the top, in increasing order.
pub fn compose_hetgen(dhhf: &HashFamily, cas: &[CoveringArray]) -> Result<CoveringArray> {
    let first = cas
        .first()
        .ok_or_else(|| Error::PairingMismatch("no covering arrays given".into()))?;
    let (t, v) = (first.strength(), first.v());
    if let Some(bad) = cas.iter().find(|c| c.strength() != t || c.v() != v) {
        return Err(Error::PairingMismatch(format!(
            "covering arrays disagree: (t, v) = ({t}, {v}) and ({}, {})",
            bad.strength(),
            bad.v()
        )));
    }
    check_claim(dhhf, t, t.min(v))?;
    let mut pairing = Vec::with_capacity(dhhf.rows());
    for (r, &w) in dhhf.widths().iter().enumerate() {
        let ca = cas.iter().find(|c| c.cols() == w).ok_or_else(|| {
            Error::PairingMismatch(format!("no covering array with {w} columns for row {r}"))
        })?;
        pairing.push(ca);
    }
    let mut coverage = vec![0usize; v];
    let mut body: Vec<Vec<Symbol>> = Vec::new();
    for (h, ca) in dhhf.row_iter().zip(&pairing) {
        let mut is_const = vec![false; v];
        for r in ca.constant_row_indices() {
            is_const[ca.row(r)[0] as usize] = true;
        }
        let mut targets: Vec<usize> = (0..v).collect();
        targets.sort_by_key(|&s| (coverage[s], s));
        let (open, closed): (Vec<usize>, Vec<usize>) = (0..v).partition(|&s| !is_const[s]);
        let mut rename = vec![0 as Symbol; v];
        for (&src, &dst) in open.iter().chain(&closed).zip(&targets) {
            rename[src] = dst as Symbol;
        }
        for &dst in &targets[..open.len()] {
            coverage[dst] += 1;
        }
        for i in block_rows(ca) {
            let src = ca.row(i);
            body.push(
                h.iter()
                    .map(|&s| rename[src[s as usize] as usize])
                    .collect(),
            );
        }
    }
    let l = dhhf.cols();
    let mut rows: Vec<Vec<Symbol>> = (0..v)
        .filter(|&s| coverage[s] == 0)
        .map(|s| vec![s as Symbol; l])
        .collect();
    rows.extend(body);
    CoveringArray::new(rows, v, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ca::{full_factorial_ca, verify_ca};
    use crate::construct::easy_product;

    #[test]
    fn phf_two_by_two() {
        let phf = easy_product(&[2, 2]).unwrap();
        let ca = full_factorial_ca(2, 2).unwrap();
        let out = compose_phf(&phf, &ca).unwrap();
        assert_eq!((out.rows(), out.cols()), (6, 4));
        assert!(verify_ca(&out, 2).unwrap().passed());
    }

    #[test]
    fn identity_row_permutes_columns() {
        let ca = full_factorial_ca(3, 2).unwrap();
        let id = HashFamily::from_rows(vec![vec![2, 0, 1]]).unwrap();
        let out = compose_phf(&id, &ca).unwrap();
        assert_eq!(out.rows(), ca.rows());
        assert!(verify_ca(&out, 3).unwrap().passed());
    }

    #[test]
    fn no_constant_rows() {
        let ca = CoveringArray::new(vec![vec![0, 1], vec![1, 0], vec![0, 0], vec![1, 1]], 2, 1)
            .unwrap()
            .with_strength(2);
        let shifted = CoveringArray::new(
            ca.to_rows()
                .into_iter()
                .filter(|r| r[0] != r[1])
                .collect::<Vec<_>>(),
            2,
            1,
        )
        .unwrap();
        assert_eq!(shifted.constant_rows(), 0);
        let phf = HashFamily::from_rows(vec![vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
        let out = compose_phf(&phf, &shifted).unwrap();
        assert_eq!(out.rows(), 2 * 2);
    }

    #[test]
    fn width_mismatch() {
        let ca = full_factorial_ca(2, 2).unwrap();
        let wide = HashFamily::from_rows(vec![vec![0, 1, 2]]).unwrap();
        assert!(matches!(
            compose_phf(&wide, &ca),
            Err(Error::PairingMismatch(_))
        ));
        assert!(compose_dhf(&wide, &ca, 3).is_err());
    }

    #[test]
    fn hetgen_desk_instance() {
        // perfect on 6 columns with widths 2 and 3
        let dhhf = HashFamily::new(
            vec![vec![0, 0, 0, 1, 1, 1], vec![0, 1, 2, 0, 1, 2]],
            vec![2, 3],
        )
        .unwrap();
        let cas = vec![full_factorial_ca(2, 2).unwrap(), {
            let f = full_factorial_ca(3, 2).unwrap();
            f.with_strength(2)
        }];
        let out = compose_hetgen(&dhhf, &cas).unwrap();
        assert_eq!(out.rows(), hetgen_row_count(&[(1, 4, 2), (1, 8, 2)], 2));
        assert!(verify_ca(&out, 2).unwrap().passed());
    }

    #[test]
    fn hetgen_row_formula() {
        // three rows of width 165 and one of width 166, each CA with one constant row
        let (n, n2, v) = (100, 110, 5);
        assert_eq!(
            hetgen_row_count(&[(3, n, 1), (1, n2, 1)], v),
            3 * n + n2 - 4
        );
        // chi kicks in when few blocks can absorb constant tuples
        assert_eq!(hetgen_row_count(&[(1, 4, 2)], 2), 2 + 2);
    }
}
