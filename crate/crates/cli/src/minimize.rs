use pauli_ramsey::{PauliChannel, PauliOperator, StabilizerGroup};
use serde_json::{json, Value};

/// Greedily drops noise operators while `bad` keeps holding, then reports
/// the smallest channel found.
pub fn reproduction(
    phi: &PauliChannel,
    r: Option<&StabilizerGroup>,
    bad: impl Fn(&PauliChannel) -> bool,
) -> Value {
    let mut ops: Vec<PauliOperator> = phi.operators();
    let mut i = 0;
    while i < ops.len() && ops.len() > 1 {
        let mut trial = ops.clone();
        trial.remove(i);
        match PauliChannel::uniform(phi.n(), &trial) {
            Ok(c) if bad(&c) => ops = trial,
            _ => i += 1,
        }
    }
    let minimal = PauliChannel::uniform(phi.n(), &ops).expect("nonempty");
    let minimized = bad(&minimal);
    let channel = if minimized {
        minimal.to_json()
    } else {
        phi.to_json()
    };
    let mut blob = json!({
        "channel": channel,
        "original_noise_operators": phi.noise().len(),
        "minimized": minimized,
    });
    if let Some(r) = r {
        blob["stabilizer"] = json!(r
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>());
    }
    blob
}
