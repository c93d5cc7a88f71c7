//! The built-in catalog: named rings assembled from declarative recipes,
//! with expected classification bits where the source material states them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construct::{
    direct_product, example_3_6_block, example_3_9_context, frobenius, galois_field,
    generalized_matrix, matrix_ring, morita_ring, seven_like_gf4, triangular_matrix_ring,
    trivial_extension, truncated_skew_power_series, zmod, BimoduleSpec, ConstructError, OrderCap,
    RingEndomorphism,
};
use crate::ring::FiniteRing;

/// Which endomorphism a twisted constructor should use.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Twist {
    Identity,
    Frobenius,
}

/// A declarative construction plan. Rebuilding a recipe is deterministic, so
/// entry hashes are reproducible across runs and platforms.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Recipe {
    Zmod(usize),
    GaloisField { p: u64, k: u32 },
    DirectProduct(Box<Recipe>, Box<Recipe>),
    MatrixRing { base: Box<Recipe>, n: usize },
    Triangular { base: Box<Recipe>, n: usize, twist: Twist },
    SkewSeries { base: Box<Recipe>, n: usize, twist: Twist },
    GeneralizedMatrix { base: Box<Recipe>, scale: usize },
    /// Trivial extension of the base by itself as the regular bimodule.
    TrivialExtension { base: Box<Recipe> },
    MoritaExample39,
    Block36 { n: usize },
    SevenLikeGf4,
}

impl Recipe {
    pub fn build(&self, cap: OrderCap) -> Result<FiniteRing, ConstructError> {
        match self {
            Recipe::Zmod(n) => zmod(*n, cap),
            Recipe::GaloisField { p, k } => galois_field(*p, *k, None, cap),
            Recipe::DirectProduct(a, b) => {
                let (ra, rb) = (a.build(cap)?, b.build(cap)?);
                direct_product(&ra, &rb, cap)
            }
            Recipe::MatrixRing { base, n } => matrix_ring(&base.build(cap)?, *n, cap),
            Recipe::Triangular { base, n, twist } => {
                let r = base.build(cap)?;
                let alpha = twist.resolve(&r)?;
                triangular_matrix_ring(&r, &alpha, *n, cap)
            }
            Recipe::SkewSeries { base, n, twist } => {
                let r = base.build(cap)?;
                let alpha = twist.resolve(&r)?;
                truncated_skew_power_series(&r, &alpha, *n, cap)
            }
            Recipe::GeneralizedMatrix { base, scale } => {
                generalized_matrix(&base.build(cap)?, *scale, cap)
            }
            Recipe::TrivialExtension { base } => {
                let r = base.build(cap)?;
                let m = BimoduleSpec::regular(&r);
                trivial_extension(&r, &m, cap)
            }
            Recipe::MoritaExample39 => morita_ring(&example_3_9_context(), cap),
            Recipe::Block36 { n } => example_3_6_block(*n, cap),
            Recipe::SevenLikeGf4 => seven_like_gf4(cap),
        }
    }
}

impl Twist {
    fn resolve(&self, r: &FiniteRing) -> Result<RingEndomorphism, ConstructError> {
        match self {
            Twist::Identity => Ok(RingEndomorphism::identity(r)),
            Twist::Frobenius => frobenius(r),
        }
    }
}

/// One catalog ring: a name, its recipe, the built ring, its content hash,
/// and the classification bits the source material pins down.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub recipe: Recipe,
    pub ring: FiniteRing,
    pub hash: String,
    /// Class name (or "commutative") to expected truth value.
    pub expected: BTreeMap<String, bool>,
}

fn z(n: usize) -> Recipe {
    Recipe::Zmod(n)
}

fn entry(
    name: &str,
    recipe: Recipe,
    expected: &[(&str, bool)],
    cap: OrderCap,
) -> CatalogEntry {
    let ring = recipe
        .build(cap)
        .unwrap_or_else(|e| panic!("catalog entry {name} failed to build: {e}"));
    CatalogEntry {
        name: name.to_string(),
        hash: ring.content_hash(),
        expected: expected
            .iter()
            .map(|(k, v)| (k.to_string(), *v))
            .collect(),
        recipe,
        ring,
    }
}

/// Builds the full catalog. Deterministic: fixed recipes, fixed default
/// polynomials, fixed element encodings.
pub fn catalog_build() -> Vec<CatalogEntry> {
    let cap = OrderCap::default();
    let mut entries = Vec::new();
    for n in 2..=8 {
        entries.push(entry(&format!("Z{n}"), z(n), &[], cap));
    }
    entries.push(entry("GF4", Recipe::GaloisField { p: 2, k: 2 }, &[("potent", true)], cap));
    entries.push(entry("GF9", Recipe::GaloisField { p: 3, k: 2 }, &[("potent", true)], cap));
    entries.push(entry(
        "M2(Z2)",
        Recipe::MatrixRing { base: Box::new(z(2)), n: 2 },
        &[
            ("periodic", true),
            ("weakly-periodic", true),
            ("strongly-periodic", false),
            ("2-primal", false),
        ],
        cap,
    ));
    entries.push(entry(
        "T2(Z3)",
        Recipe::Triangular { base: Box::new(z(3)), n: 2, twist: Twist::Identity },
        &[("J-clean-like", true), ("J-clean", false)],
        cap,
    ));
    entries.push(entry(
        "T3(Z2)",
        Recipe::Triangular { base: Box::new(z(2)), n: 3, twist: Twist::Identity },
        &[],
        cap,
    ));
    entries.push(entry(
        "R3",
        Recipe::Block36 { n: 3 },
        &[("strongly-periodic", true), ("2-primal", true)],
        cap,
    ));
    entries.push(entry(
        "R4",
        Recipe::Block36 { n: 4 },
        &[
            ("strongly-periodic", true),
            ("2-primal", true),
            ("nil-semicommutative", false),
        ],
        cap,
    ));
    entries.push(entry(
        "E3.9",
        Recipe::MoritaExample39,
        &[("strongly-periodic", true)],
        cap,
    ));
    entries.push(entry(
        "G7",
        Recipe::SevenLikeGf4,
        &[
            ("generalized-7-like", true),
            ("abelian", true),
            ("commutative", false),
            ("strongly-periodic", true),
        ],
        cap,
    ));
    entries.push(entry(
        "M(2)(Z4)",
        Recipe::GeneralizedMatrix { base: Box::new(z(4)), scale: 2 },
        &[("periodic", true)],
        cap,
    ));
    entries.push(entry(
        "M(x)(Z2[x]/(x^2))",
        Recipe::GeneralizedMatrix {
            base: Box::new(Recipe::SkewSeries {
                base: Box::new(z(2)),
                n: 2,
                twist: Twist::Identity,
            }),
            // x is the tuple (0, 1): index |Z2| = 2.
            scale: 2,
        },
        &[("periodic", true)],
        cap,
    ));
    entries.push(entry(
        "T(Z2,Z2)",
        Recipe::TrivialExtension { base: Box::new(z(2)) },
        &[("periodic", true)],
        cap,
    ));
    entries.push(entry(
        "T(Z4,Z4)",
        Recipe::TrivialExtension { base: Box::new(z(4)) },
        &[("periodic", true)],
        cap,
    ));
    entries.push(entry(
        "T2(GF4,frob)",
        Recipe::Triangular {
            base: Box::new(Recipe::GaloisField { p: 2, k: 2 }),
            n: 2,
            twist: Twist::Frobenius,
        },
        &[("periodic", true)],
        cap,
    ));
    entries.push(entry(
        "GF4[x;frob]/(x^2)",
        Recipe::SkewSeries {
            base: Box::new(Recipe::GaloisField { p: 2, k: 2 }),
            n: 2,
            twist: Twist::Frobenius,
        },
        &[("periodic", true)],
        cap,
    ));
    entries
}

/// Looks an entry up by name.
pub fn catalog_find<'c>(entries: &'c [CatalogEntry], name: &str) -> Option<&'c CatalogEntry> {
    entries.iter().find(|e| e.name == name)
}
