#pragma once
// Strict field-by-field JSON reading shared by the report and config parsers.

#include <set>
#include <string>
#include <type_traits>

#include "ybe/report.hpp"

namespace ybe::detail {

inline std::string escape_token(const std::string& k)
{
    std::string out;
    for (char ch : k) {
        if (ch == '~') out += "~0";
        else if (ch == '/') out += "~1";
        else out += ch;
    }
    return out;
}

inline std::string child(const std::string& path, const std::string& key) { return path + "/" + escape_token(key); }
inline std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

[[noreturn]] inline void fail(const LineMap& lines, const std::string& ptr, const std::string& what)
{
    throw ConfigError(ptr.empty() ? "/" : ptr, what, line_of(lines, ptr));
}

// Reads the fields of one object and complains about anything left over.
class Obj {
public:
    Obj(const json& j, std::string path, const LineMap& lines) : j_(j), path_(std::move(path)), lines_(lines)
    {
        if (!j.is_object()) fail(lines_, path_, "expected an object");
    }

    bool has(const std::string& k) const { return j_.contains(k); }
    const json* get(const std::string& k)
    {
        seen_.insert(k);
        auto it = j_.find(k);
        return it == j_.end() ? nullptr : &*it;
    }
    std::string at(const std::string& k) const { return child(path_, k); }
    const LineMap& lines() const { return lines_; }

    void num(const std::string& k, double& out)
    {
        if (auto* v = get(k)) {
            if (!v->is_number()) fail(lines_, at(k), "expected a number");
            out = v->get<double>();
        }
    }
    template <class Int>
    void integer(const std::string& k, Int& out)
    {
        if (auto* v = get(k)) {
            if (!v->is_number_integer()) fail(lines_, at(k), "expected an integer");
            if constexpr (std::is_unsigned_v<Int>) {
                if (!v->is_number_unsigned()) fail(lines_, at(k), "expected a non-negative integer");
            }
            out = v->get<Int>();
        }
    }
    void boolean(const std::string& k, bool& out)
    {
        if (auto* v = get(k)) {
            if (!v->is_boolean()) fail(lines_, at(k), "expected true or false");
            out = v->get<bool>();
        }
    }
    void str(const std::string& k, std::string& out)
    {
        if (auto* v = get(k)) {
            if (!v->is_string()) fail(lines_, at(k), "expected a string");
            out = v->get<std::string>();
        }
    }
    void complex(const std::string& k, cplx& out)
    {
        if (auto* v = get(k)) out = cplx_from_json(*v, at(k));
    }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!seen_.count(it.key())) fail(lines_, child(path_, it.key()), "unknown key '" + it.key() + "'");
    }

private:
    const json& j_;
    std::string path_;
    const LineMap& lines_;
    std::set<std::string> seen_;
};

// cplx_from_json has no line map; callers rethrow with one
inline cplx read_cplx(const json& j, const std::string& ptr, const LineMap& lines)
{
    try {
        return cplx_from_json(j, ptr);
    } catch (const ConfigError&) {
        fail(lines, ptr, "expected a number or [re, im]");
    }
}

inline const json& need_array(const json& j, const std::string& ptr, const LineMap& lines)
{
    if (!j.is_array()) fail(lines, ptr, "expected an array");
    return j;
}

}  // namespace ybe::detail
