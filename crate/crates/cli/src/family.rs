//! Turning `--family` and its parameter flags into a recipe.

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;

use impropriety::families::{FamilyRecipe, TwoPathSequence};

#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// Graph family: path, cycle, star, spider, caterpillar, wheel, complete,
    /// multipartite, square-of-path, two-path, two-tree, triangulation,
    /// corona, strong-product, tree, outerplanar
    #[arg(long)]
    pub family: Option<String>,
    /// Order (or leaf count for star, triangle count for two-path, depth
    /// for triangulation)
    #[arg(long)]
    pub n: Option<usize>,
    /// Size of the odd-numbered parts of an alternating multipartite graph
    #[arg(long)]
    pub s: Option<usize>,
    /// Size of the even-numbered parts of an alternating multipartite graph
    #[arg(long)]
    pub t: Option<usize>,
    /// The multipartite graph has 2^ell parts
    #[arg(long)]
    pub ell: Option<u32>,
    /// Spider leg lengths, e.g. 2,1,1
    #[arg(long, value_delimiter = ',')]
    pub legs: Option<Vec<usize>>,
    /// Caterpillar leaf counts along the spine, e.g. 2,0,3
    #[arg(long, value_delimiter = ',')]
    pub leaves: Option<Vec<usize>>,
    /// Part sizes of a complete multipartite graph, e.g. 1,2,3
    #[arg(long, value_delimiter = ',')]
    pub parts: Option<Vec<usize>>,
    /// Seed for the random families
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Left factor of a product, as kind:params (e.g. cycle:4)
    #[arg(long)]
    pub base: Option<String>,
    /// Right factor of a product, as kind:params (e.g. spider:2,1,1)
    #[arg(long)]
    pub fiber: Option<String>,
}

/// Canonical family name for the accepted spellings.
pub fn canonical(name: &str) -> Result<&'static str> {
    Ok(match name.replace('_', "-").as_str() {
        "path" => "path",
        "cycle" => "cycle",
        "star" => "star",
        "spider" => "spider",
        "caterpillar" => "caterpillar",
        "wheel" => "wheel",
        "complete" => "complete",
        "multipartite" | "complete-multipartite" => "multipartite",
        "square-of-path" => "square-of-path",
        "two-path" => "two-path",
        "two-tree" => "two-tree",
        "triangulation" | "iterated-triangulation" => "triangulation",
        "corona" => "corona",
        "strong-product" => "strong-product",
        "tree" => "tree",
        "outerplanar" | "maximal-outerplanar" => "outerplanar",
        other => bail!("unknown family {other:?}"),
    })
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| anyhow!("--family {family} needs --{flag}"))
}

impl FamilyArgs {
    pub fn recipe(&self) -> Result<FamilyRecipe> {
        let name = self
            .family
            .as_deref()
            .ok_or_else(|| anyhow!("give --family or --graph"))?;
        let family = canonical(name)?;
        let n = || need(self.n, "n", family);
        Ok(match family {
            "path" => FamilyRecipe::Path { n: n()? },
            "cycle" => FamilyRecipe::Cycle { n: n()? },
            "star" => FamilyRecipe::Star { leaves: n()? },
            "wheel" => FamilyRecipe::Wheel { n: n()? },
            "complete" => FamilyRecipe::Complete { n: n()? },
            "square-of-path" => FamilyRecipe::SquareOfPath { n: n()? },
            "triangulation" => FamilyRecipe::IteratedTriangulation { n: n()? },
            "tree" => FamilyRecipe::Tree {
                n: n()?,
                seed: self.seed,
            },
            "outerplanar" => FamilyRecipe::MaximalOuterplanar {
                n: n()?,
                seed: self.seed,
            },
            "two-tree" => FamilyRecipe::TwoTree {
                n: n()?,
                seed: self.seed,
                trace: None,
            },
            "two-path" => match self.n {
                Some(triangles) => FamilyRecipe::TwoPath {
                    triangles,
                    seed: self.seed,
                    sequence: None,
                },
                // without --n: the 12-triangle reference example
                None => FamilyRecipe::TwoPath {
                    triangles: 12,
                    seed: 0,
                    sequence: Some(TwoPathSequence::reference_example()),
                },
            },
            "spider" => FamilyRecipe::Spider {
                legs: self
                    .legs
                    .clone()
                    .ok_or_else(|| anyhow!("--family spider needs --legs"))?,
            },
            "caterpillar" => FamilyRecipe::Caterpillar {
                leaves: self
                    .leaves
                    .clone()
                    .ok_or_else(|| anyhow!("--family caterpillar needs --leaves"))?,
            },
            "multipartite" => match (&self.parts, self.s, self.t, self.ell) {
                (Some(parts), None, None, None) => FamilyRecipe::CompleteMultipartite {
                    parts: parts.clone(),
                },
                (None, Some(s), Some(t), Some(ell)) => {
                    if !(1..=5).contains(&ell) {
                        bail!("--ell must be in 1..=5");
                    }
                    FamilyRecipe::alternating_multipartite(s, t, 1 << ell)
                }
                _ => bail!("--family multipartite needs either --parts or all of --s, --t, --ell"),
            },
            "corona" | "strong-product" => {
                let base = parse_spec(
                    self.base
                        .as_deref()
                        .ok_or_else(|| anyhow!("--family {family} needs --base"))?,
                )?;
                let fiber = parse_spec(
                    self.fiber
                        .as_deref()
                        .ok_or_else(|| anyhow!("--family {family} needs --fiber"))?,
                )?;
                if family == "corona" {
                    FamilyRecipe::Corona {
                        base: Box::new(base),
                        fiber: Box::new(fiber),
                    }
                } else {
                    FamilyRecipe::StrongProduct {
                        left: Box::new(base),
                        right: Box::new(fiber),
                    }
                }
            }
            _ => unreachable!("canonical names are exhaustive"),
        })
    }
}

/// Parses a compact factor description `kind:params`, where params is a
/// single number for most kinds and a comma list for spider, caterpillar
/// and multipartite. Random kinds take `n` or `n,seed`.
pub fn parse_spec(spec: &str) -> Result<FamilyRecipe> {
    let (kind, params) = spec
        .split_once(':')
        .ok_or_else(|| anyhow!("factor {spec:?} should look like kind:params"))?;
    let nums: Vec<usize> = params
        .split(',')
        .map(|p| p.trim().parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .with_context(|| format!("bad parameters in {spec:?}"))?;
    let family = canonical(kind)?;
    let args = FamilyArgs {
        family: Some(family.to_string()),
        n: nums.first().copied(),
        seed: nums.get(1).copied().unwrap_or(0) as u64,
        legs: Some(nums.clone()),
        leaves: Some(nums.clone()),
        parts: Some(nums.clone()),
        ..FamilyArgs::default()
    };
    if matches!(family, "corona" | "strong-product") {
        bail!("nested products are not supported in a factor spec");
    }
    args.recipe()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(parse_spec("cycle:4").unwrap(), FamilyRecipe::Cycle { n: 4 });
        assert_eq!(
            parse_spec("spider:2,1,1").unwrap(),
            FamilyRecipe::Spider {
                legs: vec![2, 1, 1]
            }
        );
        assert_eq!(
            parse_spec("multipartite:1,2,3").unwrap(),
            FamilyRecipe::CompleteMultipartite {
                parts: vec![1, 2, 3]
            }
        );
        assert!(parse_spec("cycle").is_err());
        assert!(parse_spec("blob:3").is_err());
        assert!(parse_spec("cycle:x").is_err());
    }

    #[test]
    fn alternating_multipartite_from_flags() {
        let args = FamilyArgs {
            family: Some("multipartite".into()),
            s: Some(4),
            t: Some(3),
            ell: Some(2),
            ..FamilyArgs::default()
        };
        assert_eq!(
            args.recipe().unwrap(),
            FamilyRecipe::CompleteMultipartite {
                parts: vec![4, 3, 4, 3]
            }
        );
    }
}
