#pragma once

#include <stdexcept>
#include <string>

namespace ydn {

/// Common base so the CLI can map failure families onto exit codes.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class not_a_group : public error {
public:
    explicit not_a_group(const std::string& w) : error("NotAGroup", w) {}
};

class not_a_yd_module : public error {
public:
    explicit not_a_yd_module(const std::string& w) : error("NotAYDModule", w) {}
};

class cutoff_exceeded : public error {
public:
    explicit cutoff_exceeded(const std::string& w) : error("CutoffExceeded", w) {}
};

class not_defined_at_cutoff : public error {
public:
    explicit not_defined_at_cutoff(const std::string& w) : error("NotDefinedAtCutoff", w) {}
};

class pairing_degenerate : public error {
public:
    explicit pairing_degenerate(const std::string& w) : error("PairingDegenerate", w) {}
};

class omega_inconsistent : public error {
public:
    explicit omega_inconsistent(const std::string& w) : error("OmegaInconsistent", w) {}
};

class transport_inconsistent : public error {
public:
    explicit transport_inconsistent(const std::string& w) : error("TransportInconsistent", w) {}
};

class invalid_projection : public error {
public:
    explicit invalid_projection(const std::string& w) : error("InvalidProjection", w) {}
};

class input_error : public error {
public:
    explicit input_error(const std::string& w) : error("InputError", w) {}
};

}  // namespace ydn
