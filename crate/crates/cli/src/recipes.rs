use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use hashfam::ca::{full_factorial_ca, greedy_ca};
use hashfam::catalog::{table1_dhf, table1_phf};
use hashfam::construct::{
    append_distinct_rows, best_factor_pair, blackburn_compose, construct_52, construct_d1,
    construct_dgen, construct_dn1, construct_dn2, construct_dn3, construct_dn4, construct_dn5,
    dhhf3, easy_product, extend_strength, ingredient_parts, two_row_grid, varbb_extend,
    FractalIngredient, RowExtension, Validation,
};
use hashfam::HashFamily;

use crate::commands::{emit, read_covering, read_family, summary};
use crate::Outcome;

#[derive(Args)]
pub struct ConstructArgs {
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Skip the fractality check on ingredients.
    #[arg(long, global = true)]
    trusted: bool,

    #[command(subcommand)]
    recipe: Recipe,
}

/// A two-row ingredient: from a file, or a grid on `kappa` columns.
#[derive(Args)]
struct TwoRow {
    /// Ingredient family file.
    #[arg(long, conflicts_with_all = ["kappa", "w"])]
    ingredient: Option<PathBuf>,
    /// Columns of a two-row grid ingredient.
    #[arg(long)]
    kappa: Option<usize>,
    /// Grid widths `w1,w2` (default: the most compact factor pair of kappa).
    #[arg(long, value_delimiter = ',', requires = "kappa")]
    w: Vec<usize>,
}

impl TwoRow {
    fn load(&self) -> Result<HashFamily> {
        match (&self.ingredient, self.kappa) {
            (Some(path), _) => read_family(path),
            (None, Some(kappa)) => {
                let (w1, w2) = match self.w.as_slice() {
                    [] => best_factor_pair(kappa),
                    [a, b] => (*a, *b),
                    _ => bail!("--w takes exactly two widths"),
                };
                Ok(two_row_grid(kappa, w1, w2)?)
            }
            (None, None) => bail!("give --ingredient or --kappa"),
        }
    }
}

fn parse_ext(s: &str) -> Result<RowExtension, String> {
    if s == "balanced" {
        return Ok(RowExtension::Balanced);
    }
    match s.parse::<usize>() {
        Ok(k) if k > 0 => Ok(RowExtension::Fixed(k)),
        _ => Err(format!(
            "expected `balanced` or a positive width, got {s:?}"
        )),
    }
}

#[derive(Subcommand)]
enum Recipe {
    /// The perfect 4-row family on 5 columns of the fractal examples table.
    Table1Phf,
    /// The 4-row distributing family on 10 columns of the same table.
    Table1Dhf,
    /// Product family PHHF(t; prod a, (prod a / a_j), t).
    Easy {
        #[arg(long, value_delimiter = ',', required = true)]
        a: Vec<usize>,
    },
    /// Three-row DHHF over a1 * a2 columns.
    Dhhf3 {
        #[arg(long)]
        a1: usize,
        #[arg(long)]
        a2: usize,
    },
    /// Two-row grid on kappa columns.
    Grid {
        #[arg(long)]
        kappa: usize,
        #[arg(long, value_delimiter = ',', num_args = 2)]
        w: Vec<usize>,
    },
    /// Raise the strength by one using `copies` shifted column blocks.
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        copies: usize,
    },
    /// Append rows of all-distinct symbols.
    Append {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        rows: usize,
    },
    /// Row extension of a perfect family of strength n + d.
    Varbb {
        #[arg(long)]
        input: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        alpha: usize,
        #[arg(short)]
        k: usize,
    },
    /// Composition over the covering by all d-subsets of m.
    Dgen {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        d: usize,
        #[arg(long)]
        ingredient: PathBuf,
    },
    /// One extra row on top of an (n-1)-row fractal ingredient.
    D1 {
        #[arg(long)]
        ingredient: PathBuf,
    },
    /// PHF(n; n kappa, (n-1) kappa + 1, 2n - 1).
    Dn1 {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        kappa: usize,
    },
    /// Strength 2n - 2 from a two-row ingredient.
    Dn2 {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        ingredient: TwoRow,
        #[arg(long, default_value = "balanced", value_parser = parse_ext)]
        ext: RowExtension,
    },
    /// Strength 2n - 3 from a two-row ingredient.
    Dn3 {
        #[arg(short)]
        n: usize,
        #[command(flatten)]
        ingredient: TwoRow,
        #[arg(long, default_value = "balanced", value_parser = parse_ext)]
        ext: RowExtension,
    },
    /// Strength 2n - 4 from a three-row fractal ingredient.
    Dn4 {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        ingredient: PathBuf,
        #[arg(long, default_value = "balanced", value_parser = parse_ext)]
        ext: RowExtension,
    },
    /// Strength 2n - 5 from a four-row fractal ingredient.
    Dn5 {
        #[arg(short)]
        n: usize,
        #[arg(long)]
        ingredient: PathBuf,
        #[arg(long, default_value = "balanced", value_parser = parse_ext)]
        ext: RowExtension,
    },
    /// Five rows, strength 7, from one three-row and two two-row ingredients.
    L52 {
        #[arg(long)]
        ing3: PathBuf,
        #[arg(long)]
        ing2a: PathBuf,
        #[arg(long)]
        ing2b: PathBuf,
    },
    /// General composition: a covering plus one ingredient per element (or
    /// a single ingredient reused for all of them).
    Blackburn {
        #[arg(long)]
        covering: PathBuf,
        #[arg(long, required = true)]
        ingredient: Vec<PathBuf>,
        /// Parts of the result (default: the ingredients' least part count).
        #[arg(short)]
        p: Option<usize>,
    },
    /// Full factorial covering array CA(v^t; t, t, v).
    FactorialCa {
        #[arg(short)]
        t: usize,
        #[arg(short)]
        v: usize,
    },
    /// Greedy covering array.
    GreedyCa {
        #[arg(short)]
        t: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        v: usize,
        #[arg(long)]
        seed: u64,
    },
}

pub fn run(args: ConstructArgs) -> Result<Outcome> {
    let validation = if args.trusted {
        Validation::Trusted
    } else {
        Validation::Verify
    };
    let out = args.output.as_deref();
    let family = match args.recipe {
        Recipe::Table1Phf => table1_phf().with_claim(4, 4),
        Recipe::Table1Dhf => table1_dhf().with_claim(4, 2),
        Recipe::Easy { a } => easy_product(&a)?,
        Recipe::Dhhf3 { a1, a2 } => dhhf3(a1, a2)?,
        Recipe::Grid { kappa, w } => two_row_grid(kappa, w[0], w[1])?,
        Recipe::Extend { input, copies } => extend_strength(&read_family(&input)?, copies)?,
        Recipe::Append { input, rows } => append_distinct_rows(&read_family(&input)?, rows),
        Recipe::Varbb { input, d, alpha, k } => varbb_extend(&read_family(&input)?, d, alpha, k)?,
        Recipe::Dgen { m, d, ingredient } => {
            construct_dgen(m, d, &read_family(&ingredient)?, validation)?
        }
        Recipe::D1 { ingredient } => construct_d1(&read_family(&ingredient)?, validation)?,
        Recipe::Dn1 { n, kappa } => construct_dn1(n, kappa)?,
        Recipe::Dn2 { n, ingredient, ext } => {
            construct_dn2(n, &ingredient.load()?, ext, validation)?
        }
        Recipe::Dn3 { n, ingredient, ext } => {
            construct_dn3(n, &ingredient.load()?, ext, validation)?
        }
        Recipe::Dn4 { n, ingredient, ext } => {
            construct_dn4(n, &read_family(&ingredient)?, ext, validation)?
        }
        Recipe::Dn5 { n, ingredient, ext } => {
            construct_dn5(n, &read_family(&ingredient)?, ext, validation)?
        }
        Recipe::L52 { ing3, ing2a, ing2b } => construct_52(
            &read_family(&ing3)?,
            &read_family(&ing2a)?,
            &read_family(&ing2b)?,
            validation,
        )?,
        Recipe::Blackburn {
            covering,
            ingredient,
            p,
        } => {
            let covering = read_covering(&covering)?;
            let bases = ingredient
                .iter()
                .map(|path| read_family(path))
                .collect::<Result<Vec<_>>>()?;
            if bases.len() != 1 && bases.len() != covering.m() {
                bail!(
                    "covering has {} elements; give one ingredient or {}",
                    covering.m(),
                    covering.m()
                );
            }
            let ingredients = (0..covering.m())
                .map(|c| {
                    let base = bases[c.min(bases.len() - 1)].clone();
                    let parts = ingredient_parts(&base);
                    FractalIngredient::for_covering(base, parts, &covering, c)
                        .with_context(|| format!("ingredient for element {c}"))
                })
                .collect::<Result<Vec<_>>>()?;
            let p = p.unwrap_or_else(|| {
                ingredients
                    .iter()
                    .map(FractalIngredient::realized_parts)
                    .min()
                    .unwrap_or(1)
            });
            blackburn_compose(&covering, &ingredients, p, validation)?
        }
        Recipe::FactorialCa { t, v } => {
            let ca = full_factorial_ca(t, v)?;
            emit(
                &ca.to_text(),
                out,
                &format!(
                    "CA {} {} {} {}",
                    ca.rows(),
                    ca.cols(),
                    ca.v(),
                    ca.strength()
                ),
            )?;
            return Ok(Outcome::Success);
        }
        Recipe::GreedyCa { t, k, v, seed } => {
            let ca = greedy_ca(t, k, v, seed)?;
            emit(
                &ca.to_text(),
                out,
                &format!(
                    "CA {} {} {} {}",
                    ca.rows(),
                    ca.cols(),
                    ca.v(),
                    ca.strength()
                ),
            )?;
            return Ok(Outcome::Success);
        }
    };
    emit(
        &hashfam::text::serialize_family(&family),
        out,
        &summary(&family),
    )?;
    Ok(Outcome::Success)
}
