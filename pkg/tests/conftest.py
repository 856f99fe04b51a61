def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.TITLES):
        parts = module.RESULTS.get(number)
        if parts is None:
            terminalreporter.write_line(f"criterion {number:2d}: NOT RUN  {module.TITLES[number]}")
            continue
        ok = all(p for p, _ in parts)
        detail = " | ".join(d for _, d in parts)
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {module.TITLES[number]}: {detail}")
