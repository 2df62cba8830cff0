#![no_main]

use braidsys_core::script::{parse_script, run_script, Command};
use braidsys_core::system::BraidSystem;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(commands) = parse_script(text) else {
        return;
    };
    for c in &commands {
        let again: Command = c.to_string().parse().unwrap();
        assert_eq!(&again, c);
    }
    // Words grow under conjugation; keep runs short.
    if commands.len() <= 8 {
        let s = BraidSystem::parse(4, &["1,-2,3", "-3", "2", "-1"]).unwrap();
        let _ = run_script(&s, &commands);
    }
});
