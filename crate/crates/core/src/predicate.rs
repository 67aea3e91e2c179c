//! Named predicates for estimation: a class or its complement.

use alloc::string::String;
use core::fmt;
use core::str::FromStr;

use crate::classify::ClassId;
use crate::graph::DefiningGraph;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Predicate {
    pub class: ClassId,
    pub negated: bool,
}

impl Predicate {
    pub fn class(class: ClassId) -> Self {
        Self { class, negated: false }
    }

    pub fn not(class: ClassId) -> Self {
        Self { class, negated: true }
    }

    pub fn holds(&self, g: &DefiningGraph) -> Result<bool> {
        Ok(self.class.contains(g)? != self.negated)
    }
}

impl From<ClassId> for Predicate {
    fn from(class: ClassId) -> Self {
        Self::class(class)
    }
}

impl FromStr for Predicate {
    type Err = Error;

    /// A class name, optionally prefixed with `not-`, `not_` or `!`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let rest = t
            .strip_prefix("not-")
            .or_else(|| t.strip_prefix("not_"))
            .or_else(|| t.strip_prefix('!'));
        match rest {
            Some(r) => Ok(Self::not(r.parse().map_err(|_| Error::BadPredicate(String::from(s)))?)),
            None => Ok(Self::class(t.parse()?)),
        }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("not_")?;
        }
        write!(f, "{}", self.class)
    }
}
