use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::*;
use crate::graph::{DefiningGraph, Label};
use crate::{Error, Result};

/// The graph classes under study.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassId {
    Connected,
    Irreducible,
    /// Splits as a `k`-join. `k = 2` is reducibility, `k = inf` is
    /// disconnectedness.
    KJoin(Label),
    Cone,
    TwoTwoFree,
    TwoDimensional,
    FCType,
    LargeType,
    ExtraLarge,
    XXL,
    FreeOfInfinity,
    RAAG,
    TriangleFree,
    Spherical,
}

impl ClassId {
    /// Every class with a fixed parameter, in report order.
    pub const ALL: [ClassId; 15] = [
        ClassId::Connected,
        ClassId::Irreducible,
        ClassId::KJoin(Label::Finite(2)),
        ClassId::KJoin(Label::Infinite),
        ClassId::Cone,
        ClassId::TwoTwoFree,
        ClassId::TwoDimensional,
        ClassId::FCType,
        ClassId::LargeType,
        ClassId::ExtraLarge,
        ClassId::XXL,
        ClassId::FreeOfInfinity,
        ClassId::RAAG,
        ClassId::TriangleFree,
        ClassId::Spherical,
    ];

    pub fn contains(self, g: &DefiningGraph) -> Result<bool> {
        Ok(match self {
            ClassId::Connected => is_connected(g),
            ClassId::Irreducible => is_irreducible(g),
            ClassId::KJoin(k) => is_k_join(g, k)?,
            ClassId::Cone => is_cone(g),
            ClassId::TwoTwoFree => is_22_free(g),
            ClassId::TwoDimensional => is_two_dimensional(g),
            ClassId::FCType => is_fc_type(g)?,
            ClassId::LargeType => is_large_type(g),
            ClassId::ExtraLarge => is_extra_large(g),
            ClassId::XXL => is_xxl(g),
            ClassId::FreeOfInfinity => is_free_of_infinity(g),
            ClassId::RAAG => is_raag(g),
            ClassId::TriangleFree => is_triangle_free(g),
            ClassId::Spherical => is_spherical(g),
        })
    }

    /// Stable name, used as report key and CLI predicate name.
    pub fn name(self) -> String {
        match self {
            ClassId::Connected => "connected".into(),
            ClassId::Irreducible => "irreducible".into(),
            ClassId::KJoin(k) => format!("join_{k}"),
            ClassId::Cone => "cone".into(),
            ClassId::TwoTwoFree => "two_two_free".into(),
            ClassId::TwoDimensional => "two_dimensional".into(),
            ClassId::FCType => "fc_type".into(),
            ClassId::LargeType => "large_type".into(),
            ClassId::ExtraLarge => "extra_large".into(),
            ClassId::XXL => "xxl".into(),
            ClassId::FreeOfInfinity => "free_of_infinity".into(),
            ClassId::RAAG => "raag".into(),
            ClassId::TriangleFree => "triangle_free".into(),
            ClassId::Spherical => "spherical".into(),
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    /// Accepts the report keys plus short aliases (`22free`, `2dim`, `fc`,
    /// `large`, `join:2`, `reducible`, ...). Case and `-`/`_` are ignored.
    fn from_str(s: &str) -> Result<Self> {
        let key: String =
            s.trim().chars().map(|c| if c == '-' { '_' } else { c.to_ascii_lowercase() }).collect();
        if let Some(k) = key.strip_prefix("join_").or_else(|| key.strip_prefix("join:")) {
            let label = match k {
                "inf" | "infinity" => Label::Infinite,
                _ => k
                    .parse::<u32>()
                    .ok()
                    .and_then(|m| Label::finite(m).ok())
                    .ok_or_else(|| Error::BadPredicate(s.to_string()))?,
            };
            return Ok(ClassId::KJoin(label));
        }
        Ok(match key.as_str() {
            "connected" => ClassId::Connected,
            "irreducible" => ClassId::Irreducible,
            "reducible" => ClassId::KJoin(Label::Finite(2)),
            "disconnected" => ClassId::KJoin(Label::Infinite),
            "cone" => ClassId::Cone,
            "two_two_free" | "22free" | "22_free" => ClassId::TwoTwoFree,
            "two_dimensional" | "2dim" | "2_dimensional" => ClassId::TwoDimensional,
            "fc_type" | "fc" => ClassId::FCType,
            "large_type" | "large" => ClassId::LargeType,
            "extra_large" => ClassId::ExtraLarge,
            "xxl" => ClassId::XXL,
            "free_of_infinity" => ClassId::FreeOfInfinity,
            "raag" => ClassId::RAAG,
            "triangle_free" => ClassId::TriangleFree,
            "spherical" => ClassId::Spherical,
            _ => return Err(Error::BadPredicate(s.to_string())),
        })
    }
}

/// Group-theoretic properties known to hold on a class, keyed off class
/// membership. The table only ever adds properties; absence means "not
/// established by any listed result", never "fails".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    TorsionFree,
    TrivialCentre,
    SolvableWordAndConjugacy,
    KPi1,
    ParabolicIntersections,
    Cat0,
    AcylindricallyHyperbolic,
    HierarchicallyHyperbolic,
    Systolic,
    Biautomatic,
    TitsAlternative,
    OutFinite,
}

impl Property {
    pub fn as_str(self) -> &'static str {
        match self {
            Property::TorsionFree => "torsion-free",
            Property::TrivialCentre => "trivial centre",
            Property::SolvableWordAndConjugacy => "solvable word and conjugacy problems",
            Property::KPi1 => "K(pi,1)",
            Property::ParabolicIntersections => "parabolic subgroups closed under intersection",
            Property::Cat0 => "CAT(0)",
            Property::AcylindricallyHyperbolic => "acylindrically hyperbolic",
            Property::HierarchicallyHyperbolic => "hierarchically hyperbolic",
            Property::Systolic => "systolic",
            Property::Biautomatic => "biautomatic",
            Property::TitsAlternative => "Tits alternative",
            Property::OutFinite => "Out finite",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Membership in every class plus the derived property list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    pub connected: bool,
    pub irreducible: bool,
    pub join_2: bool,
    pub join_inf: bool,
    pub cone: bool,
    pub two_two_free: bool,
    pub two_dimensional: bool,
    pub fc_type: bool,
    pub large_type: bool,
    pub extra_large: bool,
    pub xxl: bool,
    pub free_of_infinity: bool,
    pub raag: bool,
    pub triangle_free: bool,
    pub spherical: bool,
    pub properties: Vec<Property>,
}

impl ClassReport {
    /// `(key, value)` for every class, in [`ClassId::ALL`] order.
    pub fn flags(&self) -> [(&'static str, bool); 15] {
        [
            ("connected", self.connected),
            ("irreducible", self.irreducible),
            ("join_2", self.join_2),
            ("join_inf", self.join_inf),
            ("cone", self.cone),
            ("two_two_free", self.two_two_free),
            ("two_dimensional", self.two_dimensional),
            ("fc_type", self.fc_type),
            ("large_type", self.large_type),
            ("extra_large", self.extra_large),
            ("xxl", self.xxl),
            ("free_of_infinity", self.free_of_infinity),
            ("raag", self.raag),
            ("triangle_free", self.triangle_free),
            ("spherical", self.spherical),
        ]
    }

    pub fn has(&self, p: Property) -> bool {
        self.properties.contains(&p)
    }
}

fn implied_properties(r: &ClassReport) -> Vec<Property> {
    use Property::*;
    let mut out = Vec::new();
    if r.two_dimensional {
        out.extend([TorsionFree, KPi1, SolvableWordAndConjugacy, TitsAlternative]);
    }
    // The cited result needs at least three vertices.
    if r.irreducible && !r.cone && r.n >= 3 {
        out.extend([AcylindricallyHyperbolic, TrivialCentre]);
    }
    if r.two_two_free && r.two_dimensional {
        out.push(ParabolicIntersections);
    }
    if r.xxl {
        out.push(Cat0);
    }
    if r.extra_large {
        out.push(HierarchicallyHyperbolic);
    }
    if r.large_type {
        out.extend([Systolic, Biautomatic]);
    }
    if r.large_type && r.free_of_infinity {
        out.push(OutFinite);
    }
    out.sort();
    out.dedup();
    out
}

/// Classifies `g` with the default clique budget.
pub fn classify_all(g: &DefiningGraph) -> Result<ClassReport> {
    classify_all_with_budget(g, DEFAULT_CLIQUE_BUDGET)
}

pub fn classify_all_with_budget(g: &DefiningGraph, clique_budget: usize) -> Result<ClassReport> {
    let n = g.n();
    let (join_2, join_inf) = if n >= 2 {
        (is_k_join(g, Label::Finite(2))?, is_k_join(g, Label::Infinite)?)
    } else {
        (false, false)
    };
    let mut report = ClassReport {
        n,
        connected: is_connected(g),
        irreducible: is_irreducible(g),
        join_2,
        join_inf,
        cone: is_cone(g),
        two_two_free: is_22_free(g),
        two_dimensional: is_two_dimensional(g),
        fc_type: is_fc_type_with_budget(g, clique_budget)?,
        large_type: is_large_type(g),
        extra_large: is_extra_large(g),
        xxl: is_xxl(g),
        free_of_infinity: is_free_of_infinity(g),
        raag: is_raag(g),
        triangle_free: is_triangle_free(g),
        spherical: is_spherical(g),
        properties: Vec::new(),
    };
    report.properties = implied_properties(&report);
    Ok(report)
}
