"""Instances Admin"""

from django.contrib import admin
from .models import Instance


@admin.register(Instance)
class InstanceAdmin(admin.ModelAdmin):
    list_display = ['name', 'family', 'cost_mode', 'n_vertices', 'n_edges', 'source', 'created_at']
    list_filter = ['family', 'cost_mode', 'source']
    search_fields = ['name']
    readonly_fields = ['n_vertices', 'n_edges', 'root', 'created_at', 'updated_at']

    fieldsets = (
        ('Identification', {
            'fields': ('name', 'source', 'family', 'cost_mode', 'seed', 'parameters')
        }),
        ('Graph', {
            'fields': ('n_vertices', 'n_edges', 'root', 'content')
        }),
        ('Metadata', {
            'fields': ('created_at', 'updated_at'),
            'classes': ('collapse',)
        }),
    )
