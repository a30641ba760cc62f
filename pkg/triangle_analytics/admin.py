"""Admin configuration for benchmark sweep records."""

from django.contrib import admin

from triangle_analytics.models import BenchmarkSweep, BenchmarkSweepRow


class BenchmarkSweepRowInline(admin.TabularInline):
    model = BenchmarkSweepRow
    extra = 0
    fields = ["k", "high_degree_count", "millis"]
    readonly_fields = fields
    can_delete = False


@admin.register(BenchmarkSweep)
class BenchmarkSweepAdmin(admin.ModelAdmin):
    """Admin interface for BenchmarkSweep model."""

    inlines = [BenchmarkSweepRowInline]
    list_display = ["created", "algorithm", "graph_label", "n", "m", "total", "best_k", "row_count"]
    list_filter = ["algorithm"]
    search_fields = ["graph_label", "algorithm"]
    readonly_fields = ["created", "modified"]
    ordering = ["-created"]

    fieldsets = (
        ("Input", {"fields": ("graph_label", "n", "m")}),
        ("Result", {"fields": ("algorithm", "total", "best_k", "repeat")}),
        ("Timestamps", {"fields": ("created", "modified")}),
    )

    def row_count(self, obj):
        """Display the number of K values in the sweep."""
        return obj.rows.count()

    row_count.short_description = "K values"
