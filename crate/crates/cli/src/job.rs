//! Job documents: JSON describing a ring, one or two filtrations, and
//! optionally a torus or one-parameter subgroup.

use std::sync::Arc;

use serde::Deserialize;

use kstab::algebra::GradedRing;
use kstab::filtration::{product_filtration, Generator, ReesPresentation};
use kstab::specialize::{OneParamSubgroup, Torus};

use crate::error::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobDocument {
    pub ring: RingBlock,
    #[serde(default)]
    pub filtration: Option<FiltrationBlock>,
    #[serde(default)]
    pub filtrations: Option<Vec<FiltrationBlock>>,
    #[serde(default)]
    pub torus: Option<TorusBlock>,
    #[serde(default)]
    pub one_param: Option<OneParamBlock>,
    #[serde(default)]
    pub options: OptionsBlock,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingBlock {
    pub variables: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    /// Dimension of the projective variety; inferred from the Hilbert function when absent.
    #[serde(default)]
    pub dimension: Option<usize>,
}

/// Either explicit Rees generators `t^t · element`, or the product
/// filtration of a weight vector.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiltrationBlock {
    #[serde(default)]
    pub label: Option<String>,
    #[serde(default)]
    pub generators: Option<Vec<GeneratorBlock>>,
    #[serde(default)]
    pub product: Option<Vec<i64>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorBlock {
    pub t: usize,
    pub element: String,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TorusBlock {
    #[serde(default)]
    pub cocharacters: Option<Vec<Vec<i64>>>,
    /// The diagonal torus modulo scalars.
    #[serde(default)]
    pub diagonal: bool,
    #[serde(default)]
    pub maximal: bool,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneParamBlock {
    pub weights: Vec<i64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsBlock {
    #[serde(default)]
    pub kmax: Option<usize>,
    #[serde(default)]
    pub rmax: Option<usize>,
    #[serde(default)]
    pub window: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl JobDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Document(format!("line {}, column {}: {e}", e.line(), e.column())))
    }

    fn filtration_blocks(&self) -> Result<Vec<&FiltrationBlock>, CliError> {
        match (&self.filtration, &self.filtrations) {
            (Some(f), None) => Ok(vec![f]),
            (None, Some(fs)) => Ok(fs.iter().collect()),
            (None, None) => Ok(Vec::new()),
            (Some(_), Some(_)) => Err(CliError::Document("give either `filtration` or `filtrations`, not both".into())),
        }
    }
}

/// A validated job.
#[derive(Debug, Clone)]
pub struct Job {
    pub ring: Arc<GradedRing>,
    pub filtrations: Vec<ReesPresentation>,
    pub torus: Option<Torus>,
    pub one_param: Option<OneParamSubgroup>,
    pub options: OptionsBlock,
}

fn core(context: impl Into<String>) -> impl FnOnce(kstab::Error) -> CliError {
    let context = context.into();
    move |source| CliError::Core { context, source }
}

impl Job {
    pub fn from_document(doc: &JobDocument) -> Result<Self, CliError> {
        let vars: Vec<&str> = doc.ring.variables.iter().map(String::as_str).collect();
        let rels: Vec<&str> = doc.ring.relations.iter().map(String::as_str).collect();
        let ring = Arc::new(GradedRing::parse(&vars, &rels, doc.ring.dimension).map_err(core("ring"))?);
        let filtrations = doc
            .filtration_blocks()?
            .into_iter()
            .enumerate()
            .map(|(i, block)| build_filtration(&ring, block, i))
            .collect::<Result<Vec<_>, _>>()?;
        let torus = match &doc.torus {
            None => None,
            Some(block) => Some(build_torus(&ring, block)?),
        };
        let one_param = match &doc.one_param {
            None => None,
            Some(block) => Some(OneParamSubgroup::new(ring.clone(), block.weights.clone()).map_err(core("one_param"))?),
        };
        Ok(Job { ring, filtrations, torus, one_param, options: doc.options.clone() })
    }

    pub fn load(text: &str) -> Result<Self, CliError> {
        Self::from_document(&JobDocument::parse(text)?)
    }
}

fn build_filtration(ring: &Arc<GradedRing>, block: &FiltrationBlock, index: usize) -> Result<ReesPresentation, CliError> {
    let path = format!("filtrations[{index}]");
    let presentation = match (&block.generators, &block.product) {
        (Some(gens), None) => {
            let gens = gens
                .iter()
                .enumerate()
                .map(|(j, g)| {
                    let element = ring.parse_element(&g.element).map_err(core(format!("{path}.generators[{j}].element")))?;
                    Ok(Generator::new(g.t, element))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let label = block.label.clone().unwrap_or_else(|| format!("filtration{index}"));
            ReesPresentation::new(ring.clone(), gens, label).map_err(core(format!("{path}.generators")))?
        }
        (None, Some(u)) => {
            let p = product_filtration(ring.clone(), u).map_err(core(format!("{path}.product")))?;
            match &block.label {
                Some(l) => p.with_label(l.clone()),
                None => p,
            }
        }
        _ => return Err(CliError::Document(format!("{path}: give exactly one of `generators` or `product`"))),
    };
    Ok(presentation)
}

fn build_torus(ring: &Arc<GradedRing>, block: &TorusBlock) -> Result<Torus, CliError> {
    let torus = match (&block.cocharacters, block.diagonal) {
        (Some(c), false) => Torus::new(ring.clone(), c.clone()).map_err(core("torus.cocharacters"))?,
        (None, true) => Torus::diagonal(ring.clone()).map_err(core("torus"))?,
        (None, false) => Torus::trivial(ring.clone()),
        (Some(_), true) => {
            return Err(CliError::Document("torus: give either `cocharacters` or `diagonal`, not both".into()));
        }
    };
    Ok(torus.with_maximal(block.maximal))
}
