#![no_main]

use braidsys_core::crossing::CrossingMatrix;
use braidsys_core::garside::NormalForm;
use braidsys_core::invariants::{BraidInvariantReport, SystemInvariantReport};
use braidsys_core::IntPolynomial;
use libfuzzer_sys::fuzz_target;

fn round_trip<T>(text: &str)
where
    T: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    if let Ok(v) = serde_json::from_str::<T>(text) {
        let again: T = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
    }
}

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    round_trip::<IntPolynomial>(text);
    round_trip::<NormalForm>(text);
    round_trip::<CrossingMatrix>(text);
    round_trip::<BraidInvariantReport>(text);
    round_trip::<SystemInvariantReport>(text);
});
