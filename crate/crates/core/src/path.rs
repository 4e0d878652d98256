use std::fmt;

use serde::Serialize;

/// One step from a certificate node to a child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "step", content = "index")]
pub enum PathStep {
    Premise(usize),
    Witness(usize),
    /// Into the basic-rule tree a macro node expands to.
    Expansion,
    /// Into the i-derivation of a (Prop) node.
    IDerivation,
}

/// Location of a node inside a certificate, from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct NodePath(pub Vec<PathStep>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn child(&self, step: PathStep) -> Self {
        let mut steps = self.0.clone();
        steps.push(step);
        NodePath(steps)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root")?;
        for step in &self.0 {
            match step {
                PathStep::Premise(i) => write!(f, "/premise[{i}]")?,
                PathStep::Witness(i) => write!(f, "/witness[{i}]")?,
                PathStep::Expansion => write!(f, "/expansion")?,
                PathStep::IDerivation => write!(f, "/i_derivation")?,
            }
        }
        Ok(())
    }
}
