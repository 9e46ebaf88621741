use std::str::FromStr;

use oddmatch_core::format::{Instance, Problem, Terminals};
use oddmatch_core::gadgets::{bfp_to_oace, oace_to_oap, oap_to_dap, GadgetMap, SwitchEnd};
use oddmatch_core::ub::attach_pendants;
use oddmatch_core::{Error, Matching, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reduction {
    BfpToOace,
    OaceToOap,
    OapToDap,
    AttachPendants,
}

impl Reduction {
    pub const ALL: [Reduction; 4] = [
        Reduction::BfpToOace,
        Reduction::OaceToOap,
        Reduction::OapToDap,
        Reduction::AttachPendants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Reduction::BfpToOace => "bfp-to-oace",
            Reduction::OaceToOap => "oace-to-oap",
            Reduction::OapToDap => "oap-to-dap",
            Reduction::AttachPendants => "attach-pendants",
        }
    }
}

impl FromStr for Reduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Reduction::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown reduction '{s}'")))
    }
}

/// A target instance and how the source maps into it.
#[derive(Clone, Debug)]
pub struct Transformed {
    pub instance: Instance,
    pub map: GadgetMap,
}

fn expect_source(inst: &Instance, problem: Problem, red: Reduction) -> Result<()> {
    if inst.header.problem != problem {
        return Err(Error::Usage(format!(
            "{} needs a {problem} instance, got {}",
            red.name(),
            inst.header.problem
        )));
    }
    Ok(())
}

/// Applies `red` to `inst`. Edge indices of the target are those the reduction
/// assigns, so the map stays valid; the target is not renumbered.
pub fn transform(red: Reduction, inst: &Instance, end: SwitchEnd) -> Result<Transformed> {
    let g = &inst.graph;
    let h = &inst.header;
    match red {
        Reduction::BfpToOace => {
            expect_source(inst, Problem::Bfp, red)?;
            let (Some(s), Some(t)) = (h.terminals.s, h.terminals.t) else {
                return Err(Error::Usage("bfp instance needs terminals s and t".into()));
            };
            let (target, map) = bfp_to_oace(g, s, t)?;
            let mut out = Instance::new(target.graph, Problem::Oace);
            out.header.matching = target.matching.edges().to_vec();
            out.header.designated = Some(target.designated);
            Ok(Transformed { instance: out, map })
        }
        Reduction::OaceToOap => {
            expect_source(inst, Problem::Oace, red)?;
            let m = Matching::new(g, h.matching.iter().copied())?;
            let Some(e) = h.designated else {
                return Err(Error::Usage("oace instance has no designated edge 'x'".into()));
            };
            let (target, map) = oace_to_oap(g, &m, e, end)?;
            let mut out = Instance::new(target.graph, Problem::Oap);
            out.header.matching = target.matching.edges().to_vec();
            Ok(Transformed { instance: out, map })
        }
        Reduction::OapToDap => {
            expect_source(inst, Problem::Oap, red)?;
            let m = Matching::new(g, h.matching.iter().copied())?;
            let (target, map) = oap_to_dap(g, &m)?;
            let mut out = Instance::new(target.graph, Problem::Dap);
            out.header.matching = target.matching.edges().to_vec();
            out.header.terminals = map.terminals;
            Ok(Transformed { instance: out, map })
        }
        Reduction::AttachPendants => {
            if g.is_directed() {
                return Err(Error::Usage("attach-pendants needs an undirected graph".into()));
            }
            // edges keep their indices; pendant v' = n + v hangs on edge m + v
            let target = attach_pendants(g);
            let mut out = Instance::new(target, h.problem);
            out.header.k = h.k;
            out.header.l = h.l;
            out.header.matching = (g.m()..g.m() + g.n()).collect();
            let map = GadgetMap {
                vertex_map: (0..g.n()).map(|v| vec![v]).collect(),
                edge_map: (0..g.m()).map(|e| vec![e]).collect(),
                designated: None,
                terminals: Terminals::default(),
            };
            Ok(Transformed { instance: out, map })
        }
    }
}
