#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "crashfix/change_script.hpp"

namespace crashfix {

enum class CrashCategory { NPE, OOBE, CCE };

const char* crash_category_name(CrashCategory category);
std::optional<CrashCategory> parse_crash_category(std::string_view text);
std::vector<CrashCategory> all_crash_categories();

struct FixTypeLabel {
    std::string id;
    CrashCategory category;
    std::string displayName;
};

struct Evidence {
    std::vector<int> matchedOps;  // indices into ChangeScript::ops, non-empty
    std::string narrative;
    std::vector<Span> spans;      // within the after unit's source
};

// Optional subtype facts (two-column TSV: sub <TAB> super); lookups are
// transitive. Only use_super_type consults this.
class TypeHierarchy {
public:
    void add(const std::string& sub, const std::string& super);
    bool is_supertype(const std::string& super, const std::string& sub) const;
    bool empty() const { return supers_.empty(); }

    static TypeHierarchy from_stream(std::istream& in);
    static TypeHierarchy load_file(const std::string& path);

private:
    std::map<std::string, std::set<std::string>> supers_;
};

struct DetectionContext {
    const TypeHierarchy* hierarchy = nullptr;
};

struct CatalogEntry {
    FixTypeLabel label;
    int priority = 0;       // unique within the category; 1 ranks first
    std::string exampleRef; // worked-example id shown by `catalog list`, "-" if none
    std::function<std::optional<Evidence>(const ChangeScript&, const DetectionContext&)> rule;
};

const std::vector<CatalogEntry>& full_catalog();
std::vector<const CatalogEntry*> catalog_for(CrashCategory category);
const CatalogEntry* catalog_entry(std::string_view id);

std::optional<Evidence> detect(const CatalogEntry& entry, const ChangeScript& script,
                               const DetectionContext& ctx = {});

} // namespace crashfix
