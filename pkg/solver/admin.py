"""Solver Admin"""

from django.contrib import admin
from .models import SolveRun, FrontierPoint


class FrontierPointInline(admin.TabularInline):
    model = FrontierPoint
    extra = 0
    fields = ['position', 'c_gamma', 'c_tau', 'tree_edges']
    readonly_fields = fields


@admin.register(SolveRun)
class SolveRunAdmin(admin.ModelAdmin):
    list_display = [
        'instance_label', 'method', 'cut_enabled', 'points_found',
        'timed_out', 'total_seconds', 'bnb_nodes', 'created_at'
    ]
    list_filter = ['method', 'cut_enabled', 'timed_out']
    search_fields = ['instance_label']
    readonly_fields = ['created_at']
    inlines = [FrontierPointInline]

    fieldsets = (
        ('Instance', {
            'fields': ('instance', 'instance_label', 'parameters')
        }),
        ('Configuration', {
            'fields': ('method', 'cut_enabled', 'time_limit_seconds')
        }),
        ('Measurements', {
            'fields': ('points_found', 'timed_out', 'total_seconds', 'bnb_nodes',
                       'subproblems_solved', 'cut_filtered_edges')
        }),
        ('Metadata', {
            'fields': ('created_at',),
            'classes': ('collapse',)
        }),
    )
