//! Run configuration files.
//!
//! ```toml
//! [variety]
//! ambient = "grassmannian(2,7)"
//! cuts = ["O(1)", "O(1)"]
//!
//! [bundle]
//! E = "dual(U) + 4*O"
//!
//! [locus]
//! kind = "forms-y2"
//! ```
//!
//! Ambients: `P(n)`/`Pn`/`projective(n)`, `Gr(k,n)`/`grassmannian(k,n)`,
//! `Q(n)`/`quadric(n)`, products joined by `x`, and the constructors
//! `cut(A, V, ...)`, `proj_bundle(A, E)`, `gr_bundle(A, E, k)` and
//! `flag_bundle(A, E, d1, ..., dm)`, whose bundle arguments are evaluated on
//! `A`.

use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::bott::{parse_bundle, BundleExpr};
use crate::chow::{
    flag_bundle, grassmann_bundle, grassmannian, product, projective_bundle, projective_space, quadric, zero_locus,
    Variety,
};
use crate::forms::{FormsError, FormsLocus};
use crate::nilpotent::{NilpotentError, NilpotentLocusConfig, OrbitChoice};
use crate::sheaves::SheafClass;
use crate::symfun::Partition;

use super::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub variety: VarietySection,
    pub bundle: BundleSection,
    pub locus: LocusSection,
    #[serde(default, skip_serializing_if = "OutputSection::is_default")]
    pub output: OutputSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietySection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub ambient: Spanned<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cuts: Vec<Spanned<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleSection {
    #[serde(rename = "E")]
    pub e: Spanned<String>,
    /// Twist for three-forms (absent: untwisted); `L` for Richardson loci
    /// (absent: `O(1)`).
    #[serde(rename = "L", default, skip_serializing_if = "Option::is_none")]
    pub l: Option<Spanned<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LocusKind {
    #[serde(rename = "forms-y2")]
    FormsY2,
    #[serde(rename = "richardson")]
    Richardson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocusSection {
    pub kind: LocusKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    /// Run the Koszul/Bott Hodge pipeline on homogeneous threefolds.
    #[serde(default = "yes")]
    pub hodge: bool,
}

fn yes() -> bool {
    true
}

impl Default for OutputSection {
    fn default() -> Self {
        OutputSection { hodge: true }
    }
}

impl OutputSection {
    fn is_default(&self) -> bool {
        *self == OutputSection::default()
    }
}

/// 1-based line and column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}

fn located(text: &str, offset: usize, msg: impl std::fmt::Display) -> CliError {
    let (l, c) = line_col(text, offset);
    CliError::Config(format!("{l}:{c}: {msg}"))
}

pub fn parse_config(text: &str) -> Result<RunConfig, CliError> {
    let cfg: RunConfig = toml::from_str(text).map_err(|e| match e.span() {
        Some(span) => located(text, span.start, e.message()),
        None => CliError::Config(e.message().to_string()),
    })?;
    let l = &cfg.locus;
    match l.kind {
        LocusKind::FormsY2 => {
            if l.orbit.is_some() || l.partition.is_some() || l.blocks.is_some() {
                return Err(CliError::Config("forms-y2 takes no orbit, partition or blocks".into()));
            }
        }
        LocusKind::Richardson => {
            if l.orbit.is_some() == l.partition.is_some() {
                return Err(CliError::Config("richardson needs exactly one of orbit, partition".into()));
            }
        }
    }
    Ok(cfg)
}

pub fn to_toml(cfg: &RunConfig) -> String {
    toml::to_string(cfg).expect("configs serialize")
}

/// A configured locus, ready to run.
pub enum Locus {
    Forms(FormsLocus),
    Richardson(NilpotentLocusConfig),
}

/// Position of byte `pos` inside a quoted string value.
fn inner(text: &str, s: &Spanned<String>, pos: usize, msg: impl std::fmt::Display) -> CliError {
    located(text, s.span().start + 1 + pos, msg)
}

fn bundle(text: &str, s: &Spanned<String>) -> Result<BundleExpr, CliError> {
    parse_bundle(s.get_ref()).map_err(|e| inner(text, s, e.pos, format!("{}: {}", s.get_ref(), e.msg)))
}

fn sheaf(text: &str, s: &Spanned<String>, x: &Variety) -> Result<SheafClass, CliError> {
    bundle(text, s)?.to_sheaf(x).map_err(|e| inner(text, s, 0, format!("{} on {}: {e}", s.get_ref(), x.name)))
}

impl RunConfig {
    pub fn label(&self) -> String {
        self.variety.label.clone().unwrap_or_else(|| {
            let mut s = self.variety.ambient.get_ref().clone();
            for c in &self.variety.cuts {
                s.push_str(&format!(" ∩ Z({})", c.get_ref()));
            }
            format!("{s}, E = {}", self.bundle.e.get_ref())
        })
    }

    pub fn build(&self, text: &str) -> Result<Locus, CliError> {
        let amb_s = &self.variety.ambient;
        let ambient = parse_ambient(amb_s.get_ref()).map_err(|(pos, msg)| inner(text, amb_s, pos, msg))?;
        let mut x = ambient.clone();
        for c in &self.variety.cuts {
            let v = sheaf(text, c, &ambient)?;
            let name = format!("{} ∩ Z({})", x.name, c.get_ref());
            x = zero_locus(&x, &v).map_err(|e| inner(text, c, 0, e))?;
            x.name = name;
        }
        let label = self.label();
        match self.locus.kind {
            LocusKind::FormsY2 => {
                let e = sheaf(text, &self.bundle.e, &x)?;
                let twist = self.bundle.l.as_ref().map(|l| sheaf(text, l, &x)).transpose()?;
                let cfg = if ambient.flag.is_some() && twist.is_none() && self.output.hodge {
                    let cuts: Vec<&str> = self.variety.cuts.iter().map(|c| c.get_ref().as_str()).collect();
                    FormsLocus::homogeneous(&label, &ambient, &cuts, self.bundle.e.get_ref()).map(|mut f| {
                        f.x.name = x.name.clone();
                        f
                    })
                } else {
                    FormsLocus::new(&label, x, e, twist)
                };
                cfg.map(Locus::Forms).map_err(|e| match e {
                    FormsError::Rank(_) | FormsError::Twist => inner(text, &self.bundle.e, 0, e),
                    other => CliError::Compute(other.to_string()),
                })
            }
            LocusKind::Richardson => {
                let e = sheaf(text, &self.bundle.e, &x)?;
                let l = match &self.bundle.l {
                    Some(l) => sheaf(text, l, &x)?,
                    None => x.line(&[1]).map_err(|e| CliError::Config(format!("L = O(1): {e}")))?,
                };
                let orbit = match (&self.locus.orbit, &self.locus.partition) {
                    (Some(id), _) => OrbitChoice::Catalog(*id),
                    (None, Some(p)) => OrbitChoice::Partition(
                        Partition::new(p).map_err(|e| CliError::Config(format!("partition {p:?}: {e}")))?,
                    ),
                    (None, None) => unreachable!("checked in parse_config"),
                };
                let config_error = |e: NilpotentError| match e {
                    NilpotentError::UnknownOrbit(_)
                    | NilpotentError::Rank { .. }
                    | NilpotentError::Flag { .. }
                    | NilpotentError::Twist => CliError::Config(e.to_string()),
                    other => CliError::Compute(other.to_string()),
                };
                let mut cfg = NilpotentLocusConfig::new(&label, x, e, l, orbit).map_err(config_error)?;
                if let Some(b) = &self.locus.blocks {
                    cfg = cfg.with_blocks(b).map_err(config_error)?;
                }
                Ok(Locus::Richardson(cfg))
            }
        }
    }
}

/// Splits `s` at top-level occurrences of `sep`, returning byte offsets.
fn split_top(s: &str, sep: impl Fn(char) -> bool) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if depth == 0 && sep(c) => {
                out.push((start, &s[start..i]));
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &s[start..]));
    out
}

type AmbientError = (usize, String);

/// Parses an ambient constructor chain; errors carry a byte offset.
pub fn parse_ambient(s: &str) -> Result<Variety, AmbientError> {
    let factors = split_top(s, |c| c == 'x' || c == '×');
    let mut acc: Option<Variety> = None;
    for (off, f) in factors {
        let v = parse_factor(f).map_err(|(p, m)| (off + p, m))?;
        acc = Some(match acc {
            None => v,
            Some(a) => {
                let mut p = product(&a, &v).map_err(|e| (off, e.to_string()))?;
                p.name = format!("{}x{}", a.name, v.name);
                p
            }
        });
    }
    acc.ok_or((0, "empty ambient".into()))
}

fn parse_factor(raw: &str) -> Result<Variety, AmbientError> {
    let lead = raw.len() - raw.trim_start().len();
    let f = raw.trim();
    let err = |m: String| (lead, m);
    if f.is_empty() {
        return Err(err("empty factor".into()));
    }
    let (name, args) = match f.find('(') {
        Some(i) if f.ends_with(')') => (&f[..i], Some((lead + i + 1, &f[i + 1..f.len() - 1]))),
        Some(_) => return Err(err(format!("unbalanced parentheses in {f}"))),
        None => (f, None),
    };
    // `P5`, `Q7`
    if args.is_none() {
        let (head, n) = f.split_at(1);
        let n: u32 = n.trim_start_matches('^').parse().map_err(|_| err(format!("unknown ambient {f}")))?;
        return match head {
            "P" => projective_space(n).map_err(|e| err(e.to_string())),
            "Q" => quadric(n).map_err(|e| err(e.to_string())),
            _ => Err(err(format!("unknown ambient {f}"))),
        };
    }
    let (aoff, args) = args.unwrap();
    let parts = split_top(args, |c| c == ',');
    let ints = || -> Result<Vec<u32>, AmbientError> {
        parts
            .iter()
            .map(|(o, p)| p.trim().parse().map_err(|_| (aoff + o, format!("expected an integer, got {:?}", p.trim()))))
            .collect()
    };
    let arity = |n: usize| -> Result<(), AmbientError> {
        if parts.len() == n {
            Ok(())
        } else {
            Err(err(format!("{name} takes {n} argument(s)")))
        }
    };
    let chow = |e: crate::chow::ChowError| err(e.to_string());
    let base = || -> Result<Variety, AmbientError> {
        let (o, p) = parts[0];
        parse_ambient(p).map_err(|(q, m)| (aoff + o + q, m))
    };
    let bundle_on = |i: usize, x: &Variety| -> Result<SheafClass, AmbientError> {
        let (o, p) = parts[i];
        let e = parse_bundle(p.trim()).map_err(|e| (aoff + o + e.pos, e.msg))?;
        e.to_sheaf(x).map_err(|e| (aoff + o, format!("{} on {}: {e}", p.trim(), x.name)))
    };
    match name {
        "P" | "projective" => {
            arity(1)?;
            projective_space(ints()?[0]).map_err(chow)
        }
        "Q" | "quadric" => {
            arity(1)?;
            quadric(ints()?[0]).map_err(chow)
        }
        "Gr" | "grassmannian" => {
            arity(2)?;
            let v = ints()?;
            grassmannian(v[0], v[1]).map_err(chow)
        }
        "cut" => {
            let a = base()?;
            let mut z = a.clone();
            for i in 1..parts.len() {
                z = zero_locus(&z, &bundle_on(i, &a)?).map_err(chow)?;
            }
            Ok(z)
        }
        "proj_bundle" => {
            arity(2)?;
            let a = base()?;
            projective_bundle(&a, &bundle_on(1, &a)?).map_err(chow)
        }
        "gr_bundle" => {
            arity(3)?;
            let a = base()?;
            let (o, k) = parts[2];
            let k: u32 = k.trim().parse().map_err(|_| (aoff + o, "expected an integer".to_string()))?;
            grassmann_bundle(&a, &bundle_on(1, &a)?, k).map_err(chow)
        }
        "flag_bundle" => {
            if parts.len() < 3 {
                return Err(err("flag_bundle takes a base, a bundle and subspace dimensions".into()));
            }
            let a = base()?;
            let e = bundle_on(1, &a)?;
            let dims = parts[2..]
                .iter()
                .map(|(o, p)| p.trim().parse().map_err(|_| (aoff + o, "expected an integer".to_string())))
                .collect::<Result<Vec<u32>, _>>()?;
            flag_bundle(&a, &e, &dims).map_err(chow)
        }
        _ => Err(err(format!("unknown ambient constructor {name}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ambients() {
        assert_eq!(parse_ambient("grassmannian(2,7)").unwrap().dim, 10);
        assert_eq!(parse_ambient("P2 x P2").unwrap().dim, 4);
        assert_eq!(parse_ambient("Q(7)").unwrap().dim, 7);
        assert_eq!(parse_ambient("cut(P(6), O(2), O(2))").unwrap().dim, 4);
        assert_eq!(parse_ambient("proj_bundle(P2, O + O(1))").unwrap().dim, 3);
        assert_eq!(parse_ambient("gr_bundle(P1, 4*O, 2)").unwrap().dim, 5);
        assert_eq!(parse_ambient("flag_bundle(P1, 3*O, 1, 2)").unwrap().dim, 4);
        let (pos, _) = parse_ambient("P2 x Gr(2,x)").unwrap_err();
        assert_eq!(pos, 10);
    }

    #[test]
    fn line_columns() {
        assert_eq!(line_col("ab\ncd", 4), (2, 2));
        assert_eq!(line_col("ab", 0), (1, 1));
    }
}
