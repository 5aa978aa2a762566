//! Parameterized constructions built from coverings, fractal ingredients
//! and the row extension.

use crate::combinatorics::binomial;
use crate::covering::{all_d_subsets_covering, cyclic_covering, Covering};
use crate::error::{Error, Result};
use crate::family::{HashFamily, Symbol};

use super::blackburn::{blackburn_compose, varbb_extend, FractalIngredient, Placement, Validation};
use super::coloring::konig_edge_color;

/// Column count of the blocks added by the row extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowExtension {
    /// Blocks of the given width (at least 1).
    Fixed(usize),
    /// The width that makes every row of the result equally wide. Requires
    /// the construction's width hypothesis.
    Balanced,
}

/// Parts a family is taken to distribute: its claim, or its row count.
pub fn ingredient_parts(a: &HashFamily) -> usize {
    a.claimed_parts().unwrap_or(a.rows())
}

/// Two-row perfect family on `kappa <= w1 * w2` columns: column `x` gets
/// `x mod w1` and `x div w1`.
pub fn two_row_grid(kappa: usize, w1: usize, w2: usize) -> Result<HashFamily> {
    if kappa == 0 || w1 == 0 || w2 == 0 || kappa > w1 * w2 {
        return Err(Error::invalid(format!(
            "two_row_grid needs 1 <= kappa <= w1*w2, got kappa={kappa}, w=({w1},{w2})"
        )));
    }
    let rows = vec![
        (0..kappa).map(|x| (x % w1) as Symbol).collect(),
        (0..kappa).map(|x| (x / w1) as Symbol).collect(),
    ];
    Ok(HashFamily::new(rows, vec![w1, w2])?.with_claim(2, 2))
}

/// Factor pair `(a, b)` with `a * b = kappa` and `a + b` least, `a <= b`.
pub fn best_factor_pair(kappa: usize) -> (usize, usize) {
    let mut a = (kappa as f64).sqrt() as usize;
    while a > 1 && !kappa.is_multiple_of(a) {
        a -= 1;
    }
    let a = a.max(1);
    (a, kappa / a)
}

fn require_perfect(a: &HashFamily, what: &str) -> Result<()> {
    if ingredient_parts(a) < a.rows() {
        return Err(Error::invalid(format!("{what} must be a perfect family")));
    }
    Ok(())
}

fn require_rows(a: &HashFamily, rows: usize, what: &str) -> Result<()> {
    if a.rows() != rows {
        return Err(Error::invalid(format!(
            "{what} must have {rows} rows, got {}",
            a.rows()
        )));
    }
    Ok(())
}

/// Composes along `covering` with ingredient `bases[i]` on the columns
/// whose entries name `i`. An entry `(r, c, i, j)` puts base row `j` of
/// ingredient `i` at row `r` of column `c`; every other cell is distinct.
fn compose_table(
    covering: &Covering,
    entries: &[(usize, usize, usize, usize)],
    bases: &[&HashFamily],
    validation: Validation,
) -> Result<HashFamily> {
    let (n, m) = (covering.n(), covering.m());
    let mut ingredients = Vec::with_capacity(m);
    for c in 0..m {
        let mut placement = vec![Placement::Distinct; n];
        let mut which = None;
        for &(r, _, i, j) in entries.iter().filter(|e| e.1 == c) {
            if *which.get_or_insert(i) != i {
                return Err(Error::PlacementMismatch(format!(
                    "column {c} mixes ingredients"
                )));
            }
            placement[r] = Placement::Base(j);
        }
        let base = bases[which.unwrap_or(0)];
        ingredients.push(FractalIngredient::new(
            base.clone(),
            ingredient_parts(base),
            placement,
        )?);
    }
    let p = ingredients
        .iter()
        .map(FractalIngredient::realized_parts)
        .min()
        .unwrap_or(1);
    blackburn_compose(covering, &ingredients, p, validation)
}

/// Covering whose sets are the cells not named by `entries`.
fn complement_covering(
    n: usize,
    m: usize,
    d: usize,
    entries: &[(usize, usize, usize, usize)],
) -> Result<Covering> {
    let sets = (0..n)
        .map(|r| {
            (0..m)
                .filter(|&c| !entries.iter().any(|e| e.0 == r && e.1 == c))
                .collect()
        })
        .collect();
    Covering::new(sets, m, d)
}

fn extend(
    base: HashFamily,
    d: usize,
    alpha: usize,
    ext: RowExtension,
    balanced: impl FnOnce() -> Result<usize>,
) -> Result<HashFamily> {
    let k = match ext {
        RowExtension::Fixed(0) => return Err(Error::invalid("row extension width must be >= 1")),
        RowExtension::Fixed(k) => k,
        RowExtension::Balanced => balanced()?,
    };
    if alpha == 0 {
        return Ok(base);
    }
    varbb_extend(&base, d, alpha, k)
}

/// `k = s*kappa + 1 - sum(w)`, provided `sum(w) <= limit`.
fn balanced_width(a: &HashFamily, s: usize, limit: usize, hypothesis: &str) -> Result<usize> {
    let kappa = a.cols();
    let sum = a.total_width();
    if sum > limit {
        return Err(Error::invalid(format!(
            "balanced extension needs {hypothesis}; widths sum to {sum}, kappa = {kappa}"
        )));
    }
    Ok(s * kappa + 1 - sum)
}

/// Upper bound `d*kappa + sigma` on the row widths of [`construct_dgen`],
/// where `sigma` sums the `m - d` largest ingredient widths.
pub fn dgen_width_bound(m: usize, d: usize, ingredient: &HashFamily) -> usize {
    let mut w = ingredient.widths().to_vec();
    w.sort_unstable_by(|a, b| b.cmp(a));
    d * ingredient.cols() + w.iter().take(m - d).sum::<usize>()
}

/// PHF(C(m,d); m*kappa, <= d*kappa + sigma, C(m,d) + d) from a fractal
/// PHHF(C(m-1,d); kappa, (w...), C(m-1,d)), over the covering by all
/// `d`-subsets. Base row `l` goes to row `r` of ingredient `c` when the
/// edge `x_r y_c` has colour `l`.
pub fn construct_dgen(
    m: usize,
    d: usize,
    ingredient: &HashFamily,
    validation: Validation,
) -> Result<HashFamily> {
    let covering = all_d_subsets_covering(m, d)?;
    let need = binomial(m - 1, d);
    if ingredient.rows() as u128 != need {
        return Err(Error::invalid(format!(
            "ingredient must have C({}, {d}) = {need} rows, got {}",
            m - 1,
            ingredient.rows()
        )));
    }
    require_perfect(ingredient, "ingredient")?;
    let colouring = konig_edge_color(&covering);
    let parts = ingredient.rows();
    let ingredients = (0..m)
        .map(|c| {
            let placement = (0..covering.n())
                .map(|r| match colouring.colour(r, c) {
                    None => Placement::Distinct,
                    Some(l) => Placement::Base(l),
                })
                .collect();
            FractalIngredient::new(ingredient.clone(), parts, placement)
        })
        .collect::<Result<Vec<_>>>()?;
    blackburn_compose(&covering, &ingredients, covering.n(), validation)
}

/// PHF(n; n*kappa, kappa + sum(w), n + 1) from a fractal
/// PHHF(n-1; kappa, (w...), n-1).
pub fn construct_d1(ingredient: &HashFamily, validation: Validation) -> Result<HashFamily> {
    construct_dgen(ingredient.rows() + 1, 1, ingredient, validation)
}

/// PHF(n; n*kappa, (n-1)*kappa + 1, 2n - 1).
pub fn construct_dn1(n: usize, kappa: usize) -> Result<HashFamily> {
    if n < 2 || kappa == 0 {
        return Err(Error::invalid(format!(
            "dn1 needs n >= 2, kappa >= 1, got ({n}, {kappa})"
        )));
    }
    let constant = HashFamily::new(vec![vec![0; kappa]], vec![1])?.with_claim(1, 1);
    construct_dgen(n, n - 1, &constant, Validation::Verify)
}

/// PHHF(n; 3kappa + (n-3)k, (kappa + (n-3)k + w1 + w2)^3 (3kappa + (n-4)k + 1)^(n-3), 2n - 2)
/// from a PHHF(2; kappa, (w1, w2), 2).
pub fn construct_dn2(
    n: usize,
    ingredient: &HashFamily,
    ext: RowExtension,
    validation: Validation,
) -> Result<HashFamily> {
    if n < 3 {
        return Err(Error::invalid(format!("dn2 needs n >= 3, got {n}")));
    }
    require_rows(ingredient, 2, "ingredient")?;
    let base = construct_d1(ingredient, validation)?;
    extend(base, 1, n - 3, ext, || {
        balanced_width(ingredient, 2, 2 * ingredient.cols(), "w1 + w2 <= 2 kappa")
    })
}

const DN3_ENTRIES: [(usize, usize, usize, usize); 12] = [
    (0, 0, 0, 0),
    (0, 1, 0, 1),
    (1, 1, 0, 0),
    (1, 2, 0, 1),
    (2, 2, 0, 0),
    (2, 0, 0, 1),
    (3, 3, 0, 0),
    (3, 4, 0, 1),
    (4, 4, 0, 0),
    (4, 5, 0, 1),
    (5, 5, 0, 0),
    (5, 3, 0, 1),
];

/// The `(6, 6, 3)`-covering used by [`construct_dn3`].
pub fn dn3_covering() -> Result<Covering> {
    complement_covering(6, 6, 3, &DN3_ENTRIES)
}

/// PHHF(n; 6kappa + (n-6)k, (4kappa + (n-6)k + w1 + w2)^6 (6kappa + (n-7)k + 1)^(n-6), 2n - 3)
/// from a PHHF(2; kappa, (w1, w2), 2).
pub fn construct_dn3(
    n: usize,
    ingredient: &HashFamily,
    ext: RowExtension,
    validation: Validation,
) -> Result<HashFamily> {
    if n < 6 {
        return Err(Error::invalid(format!("dn3 needs n >= 6, got {n}")));
    }
    require_rows(ingredient, 2, "ingredient")?;
    require_perfect(ingredient, "ingredient")?;
    let base = compose_table(&dn3_covering()?, &DN3_ENTRIES, &[ingredient], validation)?;
    extend(base, 3, n - 6, ext, || {
        balanced_width(ingredient, 2, 2 * ingredient.cols(), "w1 + w2 <= 2 kappa")
    })
}

/// Base row `j` at row `r` of column `r + offsets[j] mod n`.
fn cyclic_entries(n: usize, offsets: &[usize]) -> Vec<(usize, usize, usize, usize)> {
    (0..n)
        .flat_map(|r| {
            offsets
                .iter()
                .enumerate()
                .map(move |(j, &o)| (r, (r + o) % n, 0, j))
        })
        .collect()
}

/// PHHF(n; 6kappa + (n-6)k, (3kappa + (n-6)k + sum w)^6 (6kappa + (n-7)k + 1)^(n-6), 2n - 4)
/// from a fractal PHHF(3; kappa, (w1, w2, w3), 3). The balanced extension
/// requires `w1 + w2 + w3 <= kappa`.
pub fn construct_dn4(
    n: usize,
    ingredient: &HashFamily,
    ext: RowExtension,
    validation: Validation,
) -> Result<HashFamily> {
    if n < 6 {
        return Err(Error::invalid(format!("dn4 needs n >= 6, got {n}")));
    }
    require_rows(ingredient, 3, "ingredient")?;
    require_perfect(ingredient, "ingredient")?;
    let entries = cyclic_entries(6, &[2, 4, 5]);
    let base = compose_table(&cyclic_covering(6)?, &entries, &[ingredient], validation)?;
    extend(base, 2, n - 6, ext, || {
        balanced_width(ingredient, 3, ingredient.cols(), "w1 + w2 + w3 <= kappa")
    })
}

/// PHHF(n; 7kappa + (n-7)k, (3kappa + (n-7)k + sum w)^7 (7kappa + (n-8)k + 1)^(n-7), 2n - 5)
/// from a fractal PHHF(4; kappa, (w1..w4), 4).
///
/// A distributing ingredient (claimed parts `p < 4`) gives a distributing
/// result with `p` parts when `n = 7`; the row extension needs a perfect
/// ingredient.
pub fn construct_dn5(
    n: usize,
    ingredient: &HashFamily,
    ext: RowExtension,
    validation: Validation,
) -> Result<HashFamily> {
    if n < 7 {
        return Err(Error::invalid(format!("dn5 needs n >= 7, got {n}")));
    }
    require_rows(ingredient, 4, "ingredient")?;
    let entries = cyclic_entries(7, &[2, 4, 5, 6]);
    let base = compose_table(&cyclic_covering(7)?, &entries, &[ingredient], validation)?;
    extend(base, 2, n - 7, ext, || {
        balanced_width(
            ingredient,
            4,
            4 * ingredient.cols(),
            "w1 + w2 + w3 + w4 <= 4 kappa",
        )
    })
}

const L52_ENTRIES: [(usize, usize, usize, usize); 12] = [
    (0, 0, 0, 0),
    (3, 0, 0, 1),
    (4, 0, 0, 2),
    (1, 1, 0, 0),
    (4, 1, 0, 1),
    (3, 1, 0, 2),
    (2, 2, 1, 0),
    (3, 2, 1, 1),
    (4, 3, 1, 0),
    (2, 3, 1, 1),
    (0, 4, 2, 0),
    (1, 4, 2, 1),
];

/// The `(5, 5, 2)`-covering used by [`construct_52`].
pub fn l52_covering() -> Result<Covering> {
    complement_covering(5, 5, 2, &L52_ENTRIES)
}

/// PHHF(5; 2k1 + 2k2 + k3, (w0..w4), 7) from a fractal PHHF(3; k1, ...) and
/// two PHHF(2; k2, ...), PHHF(2; k3, ...).
pub fn construct_52(
    ing3: &HashFamily,
    ing2a: &HashFamily,
    ing2b: &HashFamily,
    validation: Validation,
) -> Result<HashFamily> {
    require_rows(ing3, 3, "first ingredient")?;
    require_rows(ing2a, 2, "second ingredient")?;
    require_rows(ing2b, 2, "third ingredient")?;
    for (a, what) in [(ing3, "first"), (ing2a, "second"), (ing2b, "third")] {
        require_perfect(a, &format!("{what} ingredient"))?;
    }
    compose_table(
        &l52_covering()?,
        &L52_ENTRIES,
        &[ing3, ing2a, ing2b],
        validation,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::easy_product;
    use crate::verify::verify_phf;

    #[test]
    fn grid_and_factor_pairs() {
        let g = two_row_grid(40, 5, 8).unwrap();
        assert_eq!(g.widths(), &[5, 8]);
        assert!(verify_phf(&g, 2).unwrap().passed());
        assert!(two_row_grid(41, 5, 8).is_err());
        assert_eq!(best_factor_pair(40), (5, 8));
        assert_eq!(best_factor_pair(42), (6, 7));
        assert_eq!(best_factor_pair(13), (1, 13));
        assert_eq!(best_factor_pair(1), (1, 1));
    }

    #[test]
    fn dn1_small() {
        let a = construct_dn1(2, 2).unwrap();
        assert_eq!((a.rows(), a.cols(), a.max_width()), (2, 4, 3));
        assert!(verify_phf(&a, 3).unwrap().passed());
        let b = construct_dn1(2, 1).unwrap();
        assert_eq!((b.rows(), b.cols(), b.max_width()), (2, 2, 2));
        assert_eq!(b.claimed_strength(), Some(3));
    }

    #[test]
    fn d1_on_two_by_two() {
        let a = construct_d1(&easy_product(&[2, 2]).unwrap(), Validation::Verify).unwrap();
        assert_eq!((a.rows(), a.cols()), (3, 12));
        assert_eq!(a.widths(), &[8, 8, 8]);
        assert!(verify_phf(&a, 4).unwrap().passed());
    }

    #[test]
    fn dgen_checks_row_count() {
        let ing = easy_product(&[2, 2]).unwrap();
        assert!(construct_dgen(4, 2, &ing, Validation::Verify).is_err());
    }

    #[test]
    fn internal_coverings() {
        let c = dn3_covering().unwrap();
        assert_eq!(c.set(0), &[2, 3, 4, 5]);
        assert_eq!(c.set(5), &[0, 1, 2, 4]);
        let c = l52_covering().unwrap();
        let sets: Vec<Vec<usize>> = c.sets().to_vec();
        assert_eq!(
            sets,
            vec![
                vec![1, 2, 3],
                vec![0, 2, 3],
                vec![0, 1, 4],
                vec![3, 4],
                vec![2, 4]
            ]
        );
    }

    #[test]
    fn balanced_hypotheses_enforced() {
        let wide = HashFamily::new(vec![vec![0, 1], vec![1, 0]], vec![3, 3]).unwrap();
        assert!(construct_dn2(4, &wide, RowExtension::Balanced, Validation::Verify).is_err());
        assert!(construct_dn2(4, &wide, RowExtension::Fixed(0), Validation::Verify).is_err());
        assert!(construct_dn2(4, &wide, RowExtension::Fixed(1), Validation::Verify).is_ok());
    }
}
