#![no_main]

use braidsys_core::invariants::system_invariants;
use braidsys_core::system::{BraidSystem, SystemFile};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = SystemFile::from_json(text) else {
        return;
    };
    let Ok(s) = file.to_system() else {
        return;
    };
    let letters: usize = s.components().iter().map(|c| c.len()).sum();
    if s.degree() <= 8 && s.len() <= 8 && letters <= 64 {
        let rep = system_invariants(&s);
        let json = serde_json::to_string(&rep).unwrap();
        assert!(!json.is_empty());
    }
    let back: BraidSystem = serde_json::from_str(&s.to_file(None).to_json_pretty()).unwrap();
    assert_eq!(back, s);
});
