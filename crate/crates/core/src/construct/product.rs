//! Direct constructions: product families, the 3-row distributing family,
//! distinct-row padding and the strength extension.

use crate::error::{Error, Result};
use crate::family::{concat_disjoint, HashFamily, Symbol};

/// Fractal PHHF(t; prod a_i, (tau/a_1, ..., tau/a_t), t).
///
/// Column `x` is the tuple with the first coordinate varying fastest; row `j`
/// maps it to the rank of the tuple with coordinate `j` removed, in the same
/// order.
pub fn easy_product(a: &[usize]) -> Result<HashFamily> {
    if a.is_empty() {
        return Err(Error::invalid("easy_product needs at least one factor"));
    }
    if a.contains(&0) {
        return Err(Error::invalid("easy_product factors must be positive"));
    }
    let t = a.len();
    let tau: usize = a.iter().product();
    let mut rows = vec![Vec::with_capacity(tau); t];
    let mut digits = vec![0usize; t];
    for _ in 0..tau {
        for (j, row) in rows.iter_mut().enumerate() {
            let mut rank = 0usize;
            for i in (0..t).rev().filter(|&i| i != j) {
                rank = rank * a[i] + digits[i];
            }
            row.push(rank as Symbol);
        }
        for (d, &base) in digits.iter_mut().zip(a) {
            *d += 1;
            if *d < base {
                break;
            }
            *d = 0;
        }
    }
    let widths = a.iter().map(|&ai| tau / ai).collect();
    Ok(HashFamily::new(rows, widths)?.with_claim(t, t))
}

/// Fractal DHHF(3; a1*a2, (a1, a1, a2), 3, 2). Column `(a, b)`, `b` fastest,
/// gets `a`, `a + b mod a1` and `b`.
pub fn dhhf3(a1: usize, a2: usize) -> Result<HashFamily> {
    if a2 == 0 || a1 < a2 {
        return Err(Error::invalid(format!(
            "dhhf3 needs a1 >= a2 >= 1, got ({a1}, {a2})"
        )));
    }
    let mut rows: Vec<Vec<Symbol>> = (0..3).map(|_| Vec::with_capacity(a1 * a2)).collect();
    for a in 0..a1 {
        for b in 0..a2 {
            rows[0].push(a as Symbol);
            rows[1].push(((a + b) % a1) as Symbol);
            rows[2].push(b as Symbol);
        }
    }
    Ok(HashFamily::new(rows, vec![a1, a1, a2])?.with_claim(3, 2))
}

/// Appends `j` rows with all-distinct symbols. A claim of strength equal to
/// the row count is carried forward to the new row count.
pub fn append_distinct_rows(a: &HashFamily, j: usize) -> HashFamily {
    if j == 0 {
        return a.clone();
    }
    let k = a.cols();
    let mut rows = a.to_rows();
    let mut widths = a.widths().to_vec();
    for _ in 0..j {
        rows.push((0..k as Symbol).collect());
        widths.push(k);
    }
    let out = HashFamily::new(rows, widths).expect("distinct rows fit their width");
    match (a.claimed_strength(), a.claimed_parts()) {
        (Some(t), Some(p)) if t == a.rows() => {
            let n = t + j;
            out.with_claim(n, if p >= t { n } else { p })
        }
        _ => out,
    }
}

/// PHHF(t+1; l*k, (l*v_1, ..., l*v_t, k), t+1) from a PHHF(t; k, (v...), t):
/// `l` symbol-disjoint copies side by side plus a row carrying the column's
/// index within its copy.
pub fn extend_strength(a: &HashFamily, copies: usize) -> Result<HashFamily> {
    let (t, k) = (a.rows(), a.cols());
    if copies == 0 {
        return Err(Error::invalid("extend_strength needs at least one copy"));
    }
    if t < 2 || k <= t {
        return Err(Error::invalid(format!(
            "extend_strength needs k > t >= 2, got k={k}, t={t}"
        )));
    }
    let base = a.clone().without_claim();
    let joined = concat_disjoint(&vec![base; copies])?;
    let mut rows = joined.to_rows();
    rows.push((0..copies).flat_map(|_| 0..k as Symbol).collect());
    let mut widths = joined.widths().to_vec();
    widths.push(k);
    Ok(HashFamily::new(rows, widths)?.with_claim(t + 1, t + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{alpha_of, verify_fractal, verify_phf};

    #[test]
    fn easy_two_by_two() {
        let a = easy_product(&[2, 2]).unwrap();
        assert_eq!(a.to_rows(), vec![vec![0, 0, 1, 1], vec![0, 1, 0, 1]]);
        assert!(verify_phf(&a, 2).unwrap().passed());
    }

    #[test]
    fn easy_widths() {
        let a = easy_product(&[2, 3]).unwrap();
        assert_eq!(a.cols(), 6);
        assert_eq!(a.widths(), &[3, 2]);
        assert!(easy_product(&[]).is_err());
        let single = easy_product(&[5]).unwrap();
        assert_eq!(single.to_rows(), vec![vec![0; 5]]);
    }

    #[test]
    fn easy_cube_is_fractal() {
        let a = easy_product(&[3, 3, 3]).unwrap();
        assert_eq!((a.rows(), a.cols(), a.max_width()), (3, 27, 9));
        assert!(verify_fractal(&a, 3, 3).unwrap().passed());
    }

    #[test]
    fn dhhf3_examples() {
        let a = dhhf3(2, 2).unwrap();
        assert_eq!(
            a.to_rows(),
            vec![vec![0, 0, 1, 1], vec![0, 1, 1, 0], vec![0, 1, 0, 1]]
        );
        assert!(verify_fractal(&dhhf3(3, 2).unwrap(), 3, 2)
            .unwrap()
            .passed());
        let thin = dhhf3(4, 1).unwrap();
        assert_eq!(thin.widths(), &[4, 4, 1]);
        assert!(verify_fractal(&thin, 3, 2).unwrap().passed());
        assert!(dhhf3(2, 3).is_err());
    }

    #[test]
    fn distinct_rows() {
        let c = HashFamily::from_rows(vec![vec![0, 0]]).unwrap();
        let b = append_distinct_rows(&c, 1);
        assert_eq!(b.widths(), &[1, 2]);
        assert!(verify_phf(&b, 2).unwrap().passed());
        assert_eq!(alpha_of(&b), alpha_of(&c) + 1);
        assert_eq!(append_distinct_rows(&c, 0), c);
    }

    #[test]
    fn strength_extension() {
        let a = easy_product(&[2, 2]).unwrap();
        let b = extend_strength(&a, 1).unwrap();
        assert_eq!(b.widths(), &[2, 2, 4]);
        assert!(verify_phf(&b, 3).unwrap().passed());
        let c = extend_strength(&a, 2).unwrap();
        assert_eq!(c.widths(), &[4, 4, 4]);
        assert_eq!(c.cols(), 8);
        assert!(verify_fractal(&c, 3, 3).unwrap().passed());
        let square = HashFamily::from_rows(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(extend_strength(&square, 1).is_err());
    }
}
