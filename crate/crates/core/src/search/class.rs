use std::fmt;
use std::sync::Arc;

use crate::frame_props::FrameClassification;

type Predicate = Arc<dyn Fn(&FrameClassification) -> bool + Send + Sync>;

/// A class of box-pre models, selected by a condition on the frame.
#[derive(Clone)]
pub enum ModelClass {
    /// Every box-pre model.
    AllBoxPre,
    /// Pseudo-reflexive and pseudo-symmetric frames.
    D1,
    /// Reflexive and pseudo-symmetric frames.
    D2,
    Custom(String, Predicate),
}

impl ModelClass {
    pub fn custom<F>(name: impl Into<String>, predicate: F) -> Self
    where
        F: Fn(&FrameClassification) -> bool + Send + Sync + 'static,
    {
        ModelClass::Custom(name.into(), Arc::new(predicate))
    }

    pub fn admits(&self, c: &FrameClassification) -> bool {
        match self {
            ModelClass::AllBoxPre => true,
            ModelClass::D1 => c.pseudo_reflexive && c.pseudo_symmetric,
            ModelClass::D2 => c.reflexive && c.pseudo_symmetric,
            ModelClass::Custom(_, p) => p(c),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            ModelClass::AllBoxPre => "all",
            ModelClass::D1 => "d1",
            ModelClass::D2 => "d2",
            ModelClass::Custom(name, _) => name,
        }
    }
}

impl fmt::Debug for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModelClass({})", self.name())
    }
}

impl fmt::Display for ModelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(ModelClass::AllBoxPre),
            "d1" => Ok(ModelClass::D1),
            "d2" => Ok(ModelClass::D2),
            other => Err(format!(
                "unknown model class {other:?} (expected all, d1 or d2)"
            )),
        }
    }
}
